#include "topokit/problems.hpp"

#include <stdexcept>

namespace topokit {

namespace {

void require_2d(const Grid& grid, const char* what) {
  if (grid.is_3d()) throw std::invalid_argument(std::string(what) + ": 2D grid required");
}

}  // namespace

LoadCase mbb_half(const Grid& grid) {
  require_2d(grid, "mbb_half");
  LoadCase lc;
  // Vertical DOF of node (x=0, y=0).
  lc.loads.push_back({2 * grid.node_index(0, 0) + 1, -1.0});
  for (int y = 0; y <= grid.nely; ++y) lc.fixed_dofs.push_back(2 * grid.node_index(0, y));
  lc.fixed_dofs.push_back(2 * grid.node_index(grid.nelx, grid.nely) + 1);
  return lc;
}

LoadCase cantilever_2d(const Grid& grid) {
  require_2d(grid, "cantilever_2d");
  LoadCase lc;
  const int y_mid = (grid.nely + 1) / 2;  // ceil(nely/2), 0-based row
  lc.loads.push_back({2 * grid.node_index(grid.nelx, y_mid) + 1, -1.0});
  for (int y = 0; y <= grid.nely; ++y) {
    lc.fixed_dofs.push_back(2 * grid.node_index(0, y));
    lc.fixed_dofs.push_back(2 * grid.node_index(0, y) + 1);
  }
  return lc;
}

LoadCase cantilever_3d(const Grid& grid) {
  if (!grid.is_3d())
    throw std::invalid_argument("cantilever_3d: 3D grid required");
  LoadCase lc;
  for (int z = 0; z <= grid.nelz; ++z)
    lc.loads.push_back({3 * grid.node_index(grid.nelx, grid.nely, z) + 1, -1.0});
  for (int z = 0; z <= grid.nelz; ++z)
    for (int y = 0; y <= grid.nely; ++y) {
      const int n = grid.node_index(0, y, z);
      lc.fixed_dofs.push_back(3 * n);
      lc.fixed_dofs.push_back(3 * n + 1);
      lc.fixed_dofs.push_back(3 * n + 2);
    }
  return lc;
}

const std::vector<std::string>& problem_ids() {
  static const std::vector<std::string> ids = {"mbb", "cantilever2d", "cantilever3d"};
  return ids;
}

LoadCase make_load_case(const std::string& preset_id, const Grid& grid) {
  if (preset_id == "mbb") return mbb_half(grid);
  if (preset_id == "cantilever2d") return cantilever_2d(grid);
  if (preset_id == "cantilever3d") return cantilever_3d(grid);
  throw std::invalid_argument("unknown problem preset '" + preset_id + "'");
}

}  // namespace topokit
