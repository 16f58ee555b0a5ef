#include "topokit/grid.hpp"

#include <stdexcept>
#include <string>

namespace topokit {

Grid build_grid(const std::vector<int>& dims, int dof_per_node) {
  if (dof_per_node != 2 && dof_per_node != 3)
    throw std::invalid_argument("build_grid: dof_per_node must be 2 or 3");
  if (static_cast<int>(dims.size()) != dof_per_node)
    throw std::invalid_argument("build_grid: dims has " + std::to_string(dims.size()) +
                                " entries, expected " + std::to_string(dof_per_node));
  for (int d : dims)
    if (d < 1)
      throw std::invalid_argument("build_grid: element counts must be >= 1, got " +
                                  std::to_string(d));
  Grid g;
  g.nelx = dims[0];
  g.nely = dims[1];
  g.nelz = dof_per_node == 3 ? dims[2] : 0;
  g.dof_per_node = dof_per_node;
  return g;
}

namespace {

// Writes the element's DOFs into out (8 or 24 entries).
void element_dofs_into(const Grid& g, int e, int* out) {
  int x, y, z;
  g.element_coords(e, x, y, z);
  const int ny = g.nodes_y();
  const int n_ul = x * ny + y;  // upper-left node of the element, layer-local
  const int corners[4] = {n_ul + 1, n_ul + ny + 1, n_ul + ny, n_ul};  // LL LR UR UL
  const int d = g.dof_per_node;
  if (!g.is_3d()) {
    for (int c = 0; c < 4; ++c)
      for (int k = 0; k < d; ++k) out[c * d + k] = d * corners[c] + k;
    return;
  }
  const int layer = g.nodes_per_layer();
  for (int zz = 0; zz < 2; ++zz)
    for (int c = 0; c < 4; ++c) {
      const int n = (z + zz) * layer + corners[c];
      for (int k = 0; k < d; ++k) out[(zz * 4 + c) * d + k] = d * n + k;
    }
}

}  // namespace

std::vector<int> element_dofs(const Grid& grid, int e) {
  if (e < 0 || e >= grid.n_elements())
    throw std::out_of_range("element_dofs: element index " + std::to_string(e) +
                            " outside [0, " + std::to_string(grid.n_elements()) + ")");
  std::vector<int> out(grid.is_3d() ? 24 : 8);
  element_dofs_into(grid, e, out.data());
  return out;
}

ElementDofMap::ElementDofMap(const Grid& grid)
    : dpe_(grid.is_3d() ? 24 : 8), n_elements_(grid.n_elements()) {
  flat_.resize(static_cast<std::size_t>(n_elements_) * dpe_);
  for (int e = 0; e < n_elements_; ++e)
    element_dofs_into(grid, e, flat_.data() + static_cast<std::size_t>(e) * dpe_);
}

}  // namespace topokit
