#include "topokit/solve.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include <cmath>

namespace topokit {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Jacobi-preconditioned conjugate gradients on the reduced system.
std::vector<double> cg_solve(const SparseSystem& sys, const SolverOptions& opt,
                             SolveStats& stats, const std::vector<double>* warm) {
  const int n = sys.n_free();
  const std::vector<double>& b = sys.load_free;
  std::vector<double> x(n, 0.0);

  const double norm_b = std::sqrt(dot(b, b));
  if (norm_b == 0.0) {
    stats = {0, 0.0, SolverMethod::cg};
    return x;
  }

  std::vector<double> diag(n, 1.0);
  for (int r = 0; r < n; ++r)
    for (int k = sys.row_ptr[r]; k < sys.row_ptr[r + 1]; ++k)
      if (sys.cols[k] == r && sys.vals[k] > 0.0) diag[r] = sys.vals[k];

  std::vector<double> r(n), z(n), p(n), ap(n);
  if (warm) {
    for (int i = 0; i < n; ++i) x[i] = (*warm)[sys.free_to_full[i]];
    sys.multiply(x, ap);
    for (int i = 0; i < n; ++i) r[i] = b[i] - ap[i];
  } else {
    r = b;
  }
  for (int i = 0; i < n; ++i) z[i] = r[i] / diag[i];
  p = z;
  double rz = dot(r, z);

  const long long cap = static_cast<long long>(opt.max_iter_factor) * sys.n_dofs_full;
  double rel = std::sqrt(dot(r, r)) / norm_b;
  if (rel <= opt.tol) {
    stats = {0, rel, SolverMethod::cg};
    return x;
  }
  for (long long it = 1; it <= cap; ++it) {
    sys.multiply(p, ap);
    const double pap = dot(p, ap);
    if (!(pap > 0.0))
      throw StructuralError(
          "cg: encountered non-positive curvature; the reduced stiffness is not "
          "positive definite (check the fixed DOFs)");
    const double alpha = rz / pap;
    for (int i = 0; i < n; ++i) x[i] += alpha * p[i];
    for (int i = 0; i < n; ++i) r[i] -= alpha * ap[i];
    rel = std::sqrt(dot(r, r)) / norm_b;
    if (rel <= opt.tol) {
      stats = {static_cast<int>(it), rel, SolverMethod::cg};
      return x;
    }
    for (int i = 0; i < n; ++i) z[i] = r[i] / diag[i];
    const double rz_new = dot(r, z);
    const double beta = rz_new / rz;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    rz = rz_new;
  }
  throw SolverError("cg: no convergence after " + std::to_string(cap) +
                        " iterations (relative residual " + std::to_string(rel) + ")",
                    rel, static_cast<int>(cap));
}

std::vector<double> dense_solve(const SparseSystem& sys, SolveStats& stats) {
  if (sys.n_dofs_full > kDenseDofLimit)
    throw std::invalid_argument("dense solver limited to " +
                                std::to_string(kDenseDofLimit) + " DOFs, got " +
                                std::to_string(sys.n_dofs_full));
  const int n = sys.n_free();
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int i = sys.row_ptr[r]; i < sys.row_ptr[r + 1]; ++i) k(r, sys.cols[i]) = sys.vals[i];
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) b(i) = sys.load_free[i];

  Eigen::LLT<Eigen::MatrixXd> llt(k);
  if (llt.info() != Eigen::Success)
    throw StructuralError(
        "dense solve: Cholesky factorization failed; the reduced stiffness is not "
        "positive definite (check the fixed DOFs)");
  Eigen::VectorXd u = llt.solve(b);

  const double norm_b = b.norm();
  const double rel = norm_b > 0.0 ? (k * u - b).norm() / norm_b : 0.0;
  stats = {0, rel, SolverMethod::dense};
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = u(i);
  return x;
}

}  // namespace

std::vector<double> solve_displacements(const SparseSystem& system,
                                        const SolverOptions& options, SolveStats* stats,
                                        const std::vector<double>* warm_start) {
  SolveStats local;
  std::vector<double> u_free = options.method == SolverMethod::dense
                                   ? dense_solve(system, local)
                                   : cg_solve(system, options, local, warm_start);
  if (stats) *stats = local;
  std::vector<double> u(system.n_dofs_full, 0.0);
  for (int i = 0; i < system.n_free(); ++i) u[system.free_to_full[i]] = u_free[i];
  return u;
}

}  // namespace topokit
