#pragma once

#include <stdexcept>

namespace topokit {

// Isotropic linear elastic material in dimensionless units.
//
// Solid elements get modulus E0, void elements the tiny ersatz modulus
// Emin (> 0 so the global stiffness stays nonsingular and void elements
// keep a measurable strain energy, which lets them re-enter the design).
// The penalty exponent p is kept for interface parity with the continuous
// density codes; with hard 0/1 densities rho^(p-1) = rho for every p > 1,
// so p scales all sensitivities by the same constant and cannot change
// which elements are selected.
struct MaterialModel {
  double E0 = 1.0;
  double Emin = 1e-9;
  double nu = 0.3;
  double p = 2.0;

  // Emin + rho*(E0 - Emin): the modulus assembled for an element.
  double modulus(bool solid) const { return solid ? E0 : Emin; }

  // Throws std::invalid_argument naming the offending field.
  void validate() const {
    if (!(E0 > 0.0)) throw std::invalid_argument("material.E0 must be > 0");
    if (!(Emin > 0.0) || !(Emin < E0))
      throw std::invalid_argument("material.Emin must satisfy 0 < Emin < E0");
    if (!(nu >= 0.0) || !(nu < 0.5))
      throw std::invalid_argument("material.nu must be in [0, 0.5)");
    if (!(p > 1.0)) throw std::invalid_argument("material.p must be > 1");
  }
};

}  // namespace topokit
