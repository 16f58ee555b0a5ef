#pragma once

#include <vector>

#include "topokit/assembly.hpp"

namespace topokit {

// Per-element strain energies s_e = (Emin + rho_e*(E0-Emin)) * u_e' KE u_e,
// the knapsack values. Nonnegative (KE is positive semidefinite); the Emin
// term gives deformed void elements a small positive value so they can be
// reintroduced when rewarding. u is a full-length displacement vector.
std::vector<double> element_energies(const Grid& grid, const ElementDofMap& dofmap,
                                     const DesignField& design,
                                     const MaterialModel& material,
                                     const std::vector<double>& u);

// Compliance C = f . u, the external work of the loads.
double objective(const LoadCase& load_case, const std::vector<double>& u);

}  // namespace topokit
