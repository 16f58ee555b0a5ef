#pragma once

#include <vector>

namespace topokit {

// Dense symmetric element stiffness matrix for unit Young's modulus.
// 8x8 for the 2D plane-stress quad, 24x24 for the 3D hex. DOF order
// matches element_dofs(): nodes LL, LR, UR, UL (then the z+1 layer),
// x-displacement before y (before z) per node.
struct ElementStiffness {
  int n = 0;
  std::vector<double> m;  // row-major n*n

  double operator()(int i, int j) const { return m[static_cast<std::size_t>(i) * n + j]; }
};

// Unit square Q4, plane stress, E = 1, thickness 1. The integrand is
// polynomial, so the closed-form tensor-product integration here is exact.
// Throws std::invalid_argument for nu outside [0, 0.5).
ElementStiffness element_stiffness_2d(double nu);

// Unit cube H8, full 3D isotropic elasticity, E = 1.
ElementStiffness element_stiffness_3d(double nu);

}  // namespace topokit
