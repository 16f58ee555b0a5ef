#pragma once

#include <span>
#include <vector>

namespace topokit {

// Regular voxel grid of unit-size elements.
//
// Node numbering runs down the y axis first, then across x, then z
// (column-major, matching the usual educational Matlab codes so that
// published boundary-condition index formulas translate directly):
//   node(x, y[, z]) = z*(nelx+1)*(nely+1) + x*(nely+1) + y
// y counts downward from the top of the domain (row 0 = top).
// Each node carries dof_per_node consecutive global DOFs, x first:
//   dof(n, c) = dof_per_node*n + c
//
// Element indices are column-major over (y, x[, z]):
//   element(x, y[, z]) = z*nelx*nely + x*nely + y
struct Grid {
  int nelx = 0;
  int nely = 0;
  int nelz = 0;  // 0 for 2D grids
  int dof_per_node = 2;

  bool is_3d() const { return dof_per_node == 3; }

  int nodes_x() const { return nelx + 1; }
  int nodes_y() const { return nely + 1; }
  int nodes_z() const { return is_3d() ? nelz + 1 : 1; }
  int nodes_per_layer() const { return nodes_x() * nodes_y(); }

  int n_elements() const { return nelx * nely * (is_3d() ? nelz : 1); }
  int n_nodes() const { return nodes_per_layer() * nodes_z(); }
  int n_dofs() const { return dof_per_node * n_nodes(); }

  int node_index(int x, int y, int z = 0) const {
    return z * nodes_per_layer() + x * nodes_y() + y;
  }
  int element_index(int x, int y, int z = 0) const {
    return z * nelx * nely + x * nely + y;
  }
  // Inverse of element_index.
  void element_coords(int e, int& x, int& y, int& z) const {
    const int per_layer = nelx * nely;
    z = is_3d() ? e / per_layer : 0;
    const int r = e - z * per_layer;
    x = r / nely;
    y = r % nely;
  }
};

// dims is {nelx, nely} for dof_per_node=2 or {nelx, nely, nelz} for 3.
// Throws std::invalid_argument on non-positive dims or an inconsistent
// dims/dof_per_node combination.
Grid build_grid(const std::vector<int>& dims, int dof_per_node);

inline Grid build_grid_2d(int nelx, int nely) { return build_grid({nelx, nely}, 2); }
inline Grid build_grid_3d(int nelx, int nely, int nelz) {
  return build_grid({nelx, nely, nelz}, 3);
}

// Global DOF indices of one element, bounds-checked.
//
// Local node order is counter-clockwise in the (x, up) plane starting at
// the element corner with the lowest physical height:
//   2D: LL, LR, UR, UL          (8 DOFs, x before y per node)
//   3D: same four on layer z, then the same four on layer z+1 (24 DOFs)
// "Lowest physical height" is y index +1 because y indices count downward.
std::vector<int> element_dofs(const Grid& grid, int e);

// Flat element-to-DOF table for assembly loops. Pure function of the grid
// dims; rebuilding it yields identical contents.
class ElementDofMap {
 public:
  explicit ElementDofMap(const Grid& grid);

  int dofs_per_element() const { return dpe_; }
  int n_elements() const { return n_elements_; }
  std::span<const int> dofs(int e) const {
    return {flat_.data() + static_cast<std::size_t>(e) * dpe_,
            static_cast<std::size_t>(dpe_)};
  }

 private:
  int dpe_ = 0;
  int n_elements_ = 0;
  std::vector<int> flat_;
};

}  // namespace topokit
