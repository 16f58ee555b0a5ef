#include "topokit/assembly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace topokit {

void LoadCase::validate(const Grid& grid) const {
  const int n = grid.n_dofs();
  if (fixed_dofs.empty())
    throw std::invalid_argument("load case: fixed DOF set is empty");
  for (int d : fixed_dofs)
    if (d < 0 || d >= n)
      throw std::invalid_argument("load case: fixed DOF " + std::to_string(d) +
                                  " outside [0, " + std::to_string(n) + ")");
  for (const auto& [d, v] : loads)
    if (d < 0 || d >= n)
      throw std::invalid_argument("load case: loaded DOF " + std::to_string(d) +
                                  " outside [0, " + std::to_string(n) + ")");
}

std::vector<double> LoadCase::force_vector(int n_dofs) const {
  std::vector<double> f(n_dofs, 0.0);
  for (const auto& [d, v] : loads) f[d] += v;
  return f;
}

void SparseSystem::multiply(const std::vector<double>& x, std::vector<double>& y) const {
  const int n = n_free();
  y.assign(n, 0.0);
  for (int r = 0; r < n; ++r) {
    double s = 0.0;
    for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) s += vals[k] * x[cols[k]];
    y[r] = s;
  }
}

SparseSystem assemble(const Grid& grid, const ElementDofMap& dofmap,
                      const DesignField& design, const MaterialModel& material,
                      const LoadCase& load_case) {
  if (design.size() != grid.n_elements())
    throw std::invalid_argument("assemble: design has " + std::to_string(design.size()) +
                                " elements, grid has " +
                                std::to_string(grid.n_elements()));
  const int n_full = grid.n_dofs();
  for (int d : load_case.fixed_dofs)
    if (d < 0 || d >= n_full)
      throw std::invalid_argument("assemble: fixed DOF out of range");
  for (const auto& [d, v] : load_case.loads)
    if (d < 0 || d >= n_full)
      throw std::invalid_argument("assemble: loaded DOF out of range");

  SparseSystem sys;
  sys.n_dofs_full = n_full;
  sys.full_to_free.assign(n_full, 0);
  for (int d : load_case.fixed_dofs) sys.full_to_free[d] = -1;
  for (int d = 0; d < n_full; ++d) {
    if (sys.full_to_free[d] == 0) {
      sys.full_to_free[d] = static_cast<int>(sys.free_to_full.size());
      sys.free_to_full.push_back(d);
    }
  }
  const int n = sys.n_free();
  const int n_elements = grid.n_elements();

  const ElementStiffness ke =
      grid.is_3d() ? element_stiffness_3d(material.nu) : element_stiffness_2d(material.nu);
  const int dpe = dofmap.dofs_per_element();

  // Triplet-free CSR build: count row lengths, scatter raw entries, then
  // sort and merge duplicate columns per row.
  std::vector<int> row_len(n, 0);
  std::vector<int> free_idx(dpe), local_idx(dpe);
  for (int e = 0; e < n_elements; ++e) {
    const auto dofs = dofmap.dofs(e);
    int m = 0;
    for (int i = 0; i < dpe; ++i)
      if (sys.full_to_free[dofs[i]] >= 0) free_idx[m++] = sys.full_to_free[dofs[i]];
    for (int i = 0; i < m; ++i) row_len[free_idx[i]] += m;
  }

  std::vector<int> start(n + 1, 0);
  for (int r = 0; r < n; ++r) start[r + 1] = start[r] + row_len[r];
  std::vector<int> raw_cols(start[n]);
  std::vector<double> raw_vals(start[n]);
  std::vector<int> cursor(start.begin(), start.end() - 1);

  for (int e = 0; e < n_elements; ++e) {
    const double scale = material.modulus(design.is_solid(e));
    const auto dofs = dofmap.dofs(e);
    int m = 0;
    for (int i = 0; i < dpe; ++i) {
      const int f = sys.full_to_free[dofs[i]];
      if (f >= 0) {
        free_idx[m] = f;
        local_idx[m] = i;
        ++m;
      }
    }
    for (int a = 0; a < m; ++a) {
      int& c = cursor[free_idx[a]];
      for (int b = 0; b < m; ++b) {
        raw_cols[c] = free_idx[b];
        raw_vals[c] = scale * ke(local_idx[a], local_idx[b]);
        ++c;
      }
    }
  }

  sys.row_ptr.assign(n + 1, 0);
  sys.cols.reserve(raw_cols.size() / 2);
  sys.vals.reserve(raw_vals.size() / 2);
  std::vector<int> order;
  for (int r = 0; r < n; ++r) {
    order.assign(raw_cols.begin() + start[r], raw_cols.begin() + start[r + 1]);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    const int first = static_cast<int>(sys.cols.size());
    for (int col : order) {
      sys.cols.push_back(col);
      sys.vals.push_back(0.0);
    }
    for (int k = start[r]; k < start[r + 1]; ++k) {
      const auto it = std::lower_bound(sys.cols.begin() + first, sys.cols.end(), raw_cols[k]);
      sys.vals[it - sys.cols.begin()] += raw_vals[k];
    }
    sys.row_ptr[r + 1] = static_cast<int>(sys.cols.size());
  }

  const auto f = load_case.force_vector(n_full);
  sys.load_free.resize(n);
  for (int i = 0; i < n; ++i) sys.load_free[i] = f[sys.free_to_full[i]];
  return sys;
}

}  // namespace topokit
