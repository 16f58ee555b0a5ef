#include "topokit/sensitivity.hpp"

#include <stdexcept>

namespace topokit {

std::vector<double> element_energies(const Grid& grid, const ElementDofMap& dofmap,
                                     const DesignField& design,
                                     const MaterialModel& material,
                                     const std::vector<double>& u) {
  if (design.size() != grid.n_elements())
    throw std::invalid_argument("element_energies: design/grid size mismatch");
  if (static_cast<int>(u.size()) != grid.n_dofs())
    throw std::invalid_argument("element_energies: displacement vector has wrong length");

  const ElementStiffness ke =
      grid.is_3d() ? element_stiffness_3d(material.nu) : element_stiffness_2d(material.nu);
  const int dpe = dofmap.dofs_per_element();

  std::vector<double> s(grid.n_elements());
  std::vector<double> ue(dpe);
  for (int e = 0; e < grid.n_elements(); ++e) {
    const auto dofs = dofmap.dofs(e);
    for (int i = 0; i < dpe; ++i) ue[i] = u[dofs[i]];
    double q = 0.0;
    for (int i = 0; i < dpe; ++i) {
      double row = 0.0;
      for (int j = 0; j < dpe; ++j) row += ke(i, j) * ue[j];
      q += ue[i] * row;
    }
    s[e] = material.modulus(design.is_solid(e)) * q;
  }
  return s;
}

double objective(const LoadCase& load_case, const std::vector<double>& u) {
  double c = 0.0;
  for (const auto& [dof, value] : load_case.loads) {
    if (dof < 0 || dof >= static_cast<int>(u.size()))
      throw std::invalid_argument("objective: loaded DOF out of range");
    c += value * u[dof];
  }
  return c;
}

}  // namespace topokit
