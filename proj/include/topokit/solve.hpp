#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "topokit/assembly.hpp"

namespace topokit {

// CG ran out of iterations; carries the residual it got down to.
struct SolverError : std::runtime_error {
  SolverError(const std::string& what, double residual_, int iterations_)
      : std::runtime_error(what), residual(residual_), iterations(iterations_) {}
  double residual;
  int iterations;
};

// The reduced matrix is not positive definite: the fixed DOFs leave a
// rigid-body mode (bad boundary conditions) or the assembly is degenerate.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SolverMethod { cg, dense };

struct SolverOptions {
  SolverMethod method = SolverMethod::cg;
  double tol = 1e-8;          // relative residual |K u - f| / |f|
  int max_iter_factor = 10;   // CG cap = factor * n_dofs
};

struct SolveStats {
  int iterations = 0;
  double rel_residual = 0.0;
  SolverMethod method = SolverMethod::cg;
};

// Upper bound on full DOF count for the dense factorization path.
inline constexpr int kDenseDofLimit = 3000;

// Solves the reduced system and scatters back to a full-length vector with
// exact zeros at the fixed DOFs. warm_start, if given, is a full-length
// initial guess (CG only; the result still meets the residual tolerance).
std::vector<double> solve_displacements(const SparseSystem& system,
                                        const SolverOptions& options = {},
                                        SolveStats* stats = nullptr,
                                        const std::vector<double>* warm_start = nullptr);

}  // namespace topokit
