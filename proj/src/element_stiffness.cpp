#include "topokit/element_stiffness.hpp"

#include <stdexcept>

namespace topokit {

namespace {

// Exact integrals over [0,1] of products of the linear factors
// phi_0 = 1-t, phi_1 = t and their derivatives (-1, +1).
constexpr double kValVal[2][2] = {{1.0 / 3.0, 1.0 / 6.0}, {1.0 / 6.0, 1.0 / 3.0}};
constexpr double kDerVal[2][2] = {{-0.5, -0.5}, {0.5, 0.5}};
constexpr double kDerDer[2][2] = {{1.0, -1.0}, {-1.0, 1.0}};

// Corner bit patterns in local node order LL, LR, UR, UL (y up), layer by
// layer. Bit 0 selects the factor t instead of 1-t along that axis.
constexpr int kCorner2d[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};

// integral over the unit element of dN_i/d(axis a) * dN_j/d(axis b),
// where node i has per-axis bits bi[] and the shape functions are
// tensor products of the linear factors.
double grad_product(int dim, const int* bi, const int* bj, int a, int b) {
  double v = 1.0;
  for (int c = 0; c < dim; ++c) {
    const int fi = bi[c], fj = bj[c];
    if (c == a && c == b)
      v *= kDerDer[fi][fj];
    else if (c == a)
      v *= kDerVal[fi][fj];
    else if (c == b)
      v *= kDerVal[fj][fi];  // val-der is the transpose case
    else
      v *= kValVal[fi][fj];
  }
  return v;
}

// Isotropic elasticity bilinear form with Lame-style constants:
//   K[(i,a),(j,b)] = lambda*S_ab[i][j] + mu*S_ba[i][j] + delta_ab*mu*sum_c S_cc[i][j]
// with S_ab[i][j] = integral dN_i/da dN_j/db. 2D uses the plane-stress
// lambda; 3D the genuine one.
ElementStiffness build(int dim, const int corners[][3], int n_corners, double lambda,
                       double mu) {
  ElementStiffness ke;
  ke.n = n_corners * dim;
  ke.m.assign(static_cast<std::size_t>(ke.n) * ke.n, 0.0);
  for (int i = 0; i < n_corners; ++i)
    for (int j = 0; j < n_corners; ++j) {
      double lap = 0.0;  // sum_c S_cc[i][j]
      for (int c = 0; c < dim; ++c) lap += grad_product(dim, corners[i], corners[j], c, c);
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          double v = lambda * grad_product(dim, corners[i], corners[j], a, b) +
                     mu * grad_product(dim, corners[i], corners[j], b, a);
          if (a == b) v += mu * lap;
          ke.m[static_cast<std::size_t>(i * dim + a) * ke.n + (j * dim + b)] = v;
        }
    }
  return ke;
}

void check_nu(double nu) {
  if (!(nu >= 0.0) || !(nu < 0.5))
    throw std::invalid_argument("element stiffness: nu must be in [0, 0.5)");
}

}  // namespace

ElementStiffness element_stiffness_2d(double nu) {
  check_nu(nu);
  int corners[4][3];
  for (int i = 0; i < 4; ++i) {
    corners[i][0] = kCorner2d[i][0];
    corners[i][1] = kCorner2d[i][1];
    corners[i][2] = 0;
  }
  const double lambda = nu / (1.0 - nu * nu);  // plane-stress reduction
  const double mu = 1.0 / (2.0 * (1.0 + nu));
  return build(2, corners, 4, lambda, mu);
}

ElementStiffness element_stiffness_3d(double nu) {
  check_nu(nu);
  int corners[8][3];
  for (int z = 0; z < 2; ++z)
    for (int i = 0; i < 4; ++i) {
      corners[z * 4 + i][0] = kCorner2d[i][0];
      corners[z * 4 + i][1] = kCorner2d[i][1];
      corners[z * 4 + i][2] = z;
    }
  const double lambda = nu / ((1.0 + nu) * (1.0 - 2.0 * nu));
  const double mu = 1.0 / (2.0 * (1.0 + nu));
  return build(3, corners, 8, lambda, mu);
}

}  // namespace topokit
