#include "oracles.hpp"

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <stdexcept>

namespace topokit::oracles {

namespace {

// Local corner coordinates in natural [-1,1] space, order LL LR UR UL
// (y up), bottom layer then top layer for 3D.
constexpr double kXi[8] = {-1, 1, 1, -1, -1, 1, 1, -1};
constexpr double kEta[8] = {-1, -1, 1, 1, -1, -1, 1, 1};
constexpr double kZeta[8] = {-1, -1, -1, -1, 1, 1, 1, 1};

Eigen::MatrixXd quad_ke_2d(double nu) {
  // Plane stress constitutive matrix, E = 1, Voigt [xx, yy, xy].
  Eigen::Matrix3d d;
  d << 1.0, nu, 0.0, nu, 1.0, 0.0, 0.0, 0.0, (1.0 - nu) / 2.0;
  d *= 1.0 / (1.0 - nu * nu);

  Eigen::MatrixXd ke = Eigen::MatrixXd::Zero(8, 8);
  const double g = 1.0 / std::sqrt(3.0);
  // Unit square element: jacobian diag(1/2), det 1/4.
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double xi = (a ? g : -g), eta = (b ? g : -g);
      Eigen::MatrixXd bm = Eigen::MatrixXd::Zero(3, 8);
      for (int i = 0; i < 4; ++i) {
        const double dndx = 2.0 * 0.25 * kXi[i] * (1.0 + kEta[i] * eta);
        const double dndy = 2.0 * 0.25 * kEta[i] * (1.0 + kXi[i] * xi);
        bm(0, 2 * i) = dndx;
        bm(1, 2 * i + 1) = dndy;
        bm(2, 2 * i) = dndy;
        bm(2, 2 * i + 1) = dndx;
      }
      ke += bm.transpose() * d * bm * 0.25;
    }
  return ke;
}

Eigen::MatrixXd quad_ke_3d(double nu) {
  const double lambda = nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const double mu = 1.0 / (2.0 * (1.0 + nu));
  // Voigt order [xx, yy, zz, yz, xz, xy].
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(6, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d(i, j) = lambda + (i == j ? 2.0 * mu : 0.0);
  for (int i = 3; i < 6; ++i) d(i, i) = mu;

  Eigen::MatrixXd ke = Eigen::MatrixXd::Zero(24, 24);
  const double g = 1.0 / std::sqrt(3.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const double xi = (a ? g : -g), eta = (b ? g : -g), zeta = (c ? g : -g);
        Eigen::MatrixXd bm = Eigen::MatrixXd::Zero(6, 24);
        for (int i = 0; i < 8; ++i) {
          const double dndx = 2.0 * 0.125 * kXi[i] * (1.0 + kEta[i] * eta) * (1.0 + kZeta[i] * zeta);
          const double dndy = 2.0 * 0.125 * kEta[i] * (1.0 + kXi[i] * xi) * (1.0 + kZeta[i] * zeta);
          const double dndz = 2.0 * 0.125 * kZeta[i] * (1.0 + kXi[i] * xi) * (1.0 + kEta[i] * eta);
          const int col = 3 * i;
          bm(0, col) = dndx;
          bm(1, col + 1) = dndy;
          bm(2, col + 2) = dndz;
          bm(3, col + 1) = dndz;
          bm(3, col + 2) = dndy;
          bm(4, col) = dndz;
          bm(4, col + 2) = dndx;
          bm(5, col) = dndy;
          bm(5, col + 1) = dndx;
        }
        ke += bm.transpose() * d * bm * 0.125;
      }
  return ke;
}

// Element corner nodes computed from coordinates, independent of the
// library's dof map. Returns global DOFs in the shared documented order.
std::vector<int> oracle_element_dofs(const Grid& g, int ex, int ey, int ez) {
  const int ny = g.nely + 1;
  const int layer = (g.nelx + 1) * ny;
  // (x, y-index) corners, order LL LR UR UL in the y-up convention; the
  // y index itself counts downward, so LL sits at ey + 1.
  const int cx[4] = {ex, ex + 1, ex + 1, ex};
  const int cy[4] = {ey + 1, ey + 1, ey, ey};
  std::vector<int> dofs;
  const int layers = g.is_3d() ? 2 : 1;
  for (int l = 0; l < layers; ++l)
    for (int c = 0; c < 4; ++c) {
      const int node = (ez + l) * layer + cx[c] * ny + cy[c];
      for (int k = 0; k < g.dof_per_node; ++k) dofs.push_back(g.dof_per_node * node + k);
    }
  return dofs;
}

}  // namespace

Eigen::MatrixXd quadrature_element_stiffness(double nu, int dim) {
  if (dim == 2) return quad_ke_2d(nu);
  if (dim == 3) return quad_ke_3d(nu);
  throw std::invalid_argument("quadrature_element_stiffness: dim must be 2 or 3");
}

Eigen::MatrixXd dense_reduced_stiffness(const Grid& grid, const DesignField& design,
                                        const MaterialModel& material,
                                        const LoadCase& load_case) {
  const int n_full = grid.n_dofs();
  Eigen::MatrixXd k_full = Eigen::MatrixXd::Zero(n_full, n_full);
  const Eigen::MatrixXd ke = quadrature_element_stiffness(material.nu, grid.is_3d() ? 3 : 2);

  const int nz = grid.is_3d() ? grid.nelz : 1;
  for (int ez = 0; ez < nz; ++ez)
    for (int ex = 0; ex < grid.nelx; ++ex)
      for (int ey = 0; ey < grid.nely; ++ey) {
        const int e = grid.element_index(ex, ey, ez);
        const double scale =
            material.Emin + (design.is_solid(e) ? 1.0 : 0.0) * (material.E0 - material.Emin);
        const auto dofs = oracle_element_dofs(grid, ex, ey, ez);
        for (std::size_t i = 0; i < dofs.size(); ++i)
          for (std::size_t j = 0; j < dofs.size(); ++j)
            k_full(dofs[i], dofs[j]) += scale * ke(static_cast<int>(i), static_cast<int>(j));
      }

  std::vector<bool> fixed(n_full, false);
  for (int d : load_case.fixed_dofs) fixed[d] = true;
  std::vector<int> keep;
  for (int d = 0; d < n_full; ++d)
    if (!fixed[d]) keep.push_back(d);

  Eigen::MatrixXd k(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) k(i, j) = k_full(keep[i], keep[j]);
  return k;
}

std::vector<double> dense_solve(const Grid& grid, const DesignField& design,
                                const MaterialModel& material, const LoadCase& load_case) {
  if (grid.n_dofs() > 3000)
    throw std::invalid_argument("oracle dense_solve limited to 3000 DOFs");
  const Eigen::MatrixXd k = dense_reduced_stiffness(grid, design, material, load_case);

  std::vector<bool> fixed(grid.n_dofs(), false);
  for (int d : load_case.fixed_dofs) fixed[d] = true;
  std::vector<int> keep;
  for (int d = 0; d < grid.n_dofs(); ++d)
    if (!fixed[d]) keep.push_back(d);

  Eigen::VectorXd b = Eigen::VectorXd::Zero(keep.size());
  for (const auto& [dof, value] : load_case.loads)
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (keep[i] == dof) b(i) += value;

  const Eigen::VectorXd u_free = Eigen::LDLT<Eigen::MatrixXd>(k).solve(b);
  std::vector<double> u(grid.n_dofs(), 0.0);
  for (std::size_t i = 0; i < keep.size(); ++i) u[keep[i]] = u_free(i);
  return u;
}

double min_reduced_eigenvalue(const Grid& grid, const DesignField& design,
                              const MaterialModel& material, const LoadCase& load_case) {
  const Eigen::MatrixXd k = dense_reduced_stiffness(grid, design, material, load_case);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double enumerate_knapsack(const std::vector<double>& values, int k) {
  const int n = static_cast<int>(values.size());
  if (n > 20) throw std::invalid_argument("enumerate_knapsack: n must be <= 20");
  if (k < 0 || k > n) throw std::invalid_argument("enumerate_knapsack: k out of range");
  double best = -1e300;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s += values[i];
    if (s > best) best = s;
  }
  return best;
}

}  // namespace topokit::oracles
