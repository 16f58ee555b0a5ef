#pragma once

#include <vector>

#include "topokit/design.hpp"
#include "topokit/element_stiffness.hpp"
#include "topokit/grid.hpp"
#include "topokit/material.hpp"

namespace topokit {

// Point loads plus homogeneous Dirichlet supports, as global DOF indices.
struct LoadCase {
  std::vector<std::pair<int, double>> loads;  // (global DOF, force value)
  std::vector<int> fixed_dofs;

  // Range-checks indices against the grid and requires a nonempty fixed
  // set. Throws std::invalid_argument.
  void validate(const Grid& grid) const;

  // Full-length load vector.
  std::vector<double> force_vector(int n_dofs) const;
};

// Global stiffness reduced by the fixed DOFs (rows/columns removed, so the
// reduced matrix stays symmetric and, with all rigid-body modes fixed and
// Emin > 0, positive definite). CSR storage over free DOFs.
struct SparseSystem {
  int n_dofs_full = 0;
  std::vector<int> free_to_full;
  std::vector<int> full_to_free;  // -1 at fixed DOFs

  std::vector<int> row_ptr;  // size n_free()+1
  std::vector<int> cols;
  std::vector<double> vals;
  std::vector<double> load_free;

  int n_free() const { return static_cast<int>(free_to_full.size()); }

  // y = K*x on the free subspace.
  void multiply(const std::vector<double>& x, std::vector<double>& y) const;
};

// Assembles Emin + rho_e*(E0 - Emin) scaled element contributions into the
// reduced system. design must have grid.n_elements() entries.
SparseSystem assemble(const Grid& grid, const ElementDofMap& dofmap,
                      const DesignField& design, const MaterialModel& material,
                      const LoadCase& load_case);

}  // namespace topokit
