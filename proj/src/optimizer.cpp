#include "topokit/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "topokit/knapsack.hpp"
#include "topokit/problems.hpp"
#include "topokit/sensitivity.hpp"

namespace topokit {

Grid RunConfig::make_grid() const {
  return nelz > 0 ? build_grid_3d(nelx, nely, nelz) : build_grid_2d(nelx, nely);
}

void RunConfig::validate() const {
  if (nelx < 1) throw std::invalid_argument("nelx must be >= 1");
  if (nely < 1) throw std::invalid_argument("nely must be >= 1");
  if (nelz < 0) throw std::invalid_argument("nelz must be >= 0");
  if (!(volfrac > 0.0) || !(volfrac <= 1.0))
    throw std::invalid_argument("volfrac must be in (0, 1]");
  if (!(mu > 0.0) || !(mu < 1.0)) throw std::invalid_argument("mu must be in (0, 1)");
  if (max_outer_iterations < 1)
    throw std::invalid_argument("max_outer_iterations must be >= 1");
  if (!(solver.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  material.validate();
  if (!custom_load_case) {
    const auto& ids = problem_ids();
    bool known = false;
    for (const auto& id : ids) known = known || id == problem;
    if (!known) throw std::invalid_argument("unknown problem preset '" + problem + "'");
  }
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::converged: return "converged";
    case Termination::converged_cycle: return "converged-cycle";
    case Termination::max_iterations: return "max-iterations";
    case Termination::solver_failure: return "solver-failure";
  }
  return "unknown";
}

RunResult run(const RunConfig& config, const IterationCallback& on_iteration) {
  config.validate();
  const Grid grid = config.make_grid();
  const ElementDofMap dofmap(grid);
  const LoadCase load_case =
      config.custom_load_case ? *config.custom_load_case : make_load_case(config.problem, grid);
  load_case.validate(grid);

  const int n = grid.n_elements();
  const int target = static_cast<int>(std::llround(n * config.volfrac));

  RunResult result;
  result.grid = grid;

  DesignField design(n, true);   // rho^0: all solid
  DesignField two_back = design; // rho^{k-2}
  std::vector<double> last_energies;
  std::vector<double> u;
  bool prev_at_target = false;
  int cycle_run = 0;
  result.reason = Termination::max_iterations;

  for (int k = 1; k <= config.max_outer_iterations; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    const int budget = volume_budget(n, config.volfrac, config.mu, k);

    IterationRecord rec;
    rec.iteration = k;
    rec.budget = budget;
    rec.vol_frac = static_cast<double>(budget) / n;

    SolveStats stats;
    try {
      const SparseSystem sys = assemble(grid, dofmap, design, config.material, load_case);
      const std::vector<double>* warm = u.empty() ? nullptr : &u;
      u = solve_displacements(sys, config.solver, &stats, warm);
    } catch (const SolverError& err) {
      result.error = "iteration " + std::to_string(k) + ": " + err.what();
      result.reason = Termination::solver_failure;
      result.final_design = design;
      return result;
    } catch (const StructuralError& err) {
      result.error = "iteration " + std::to_string(k) + ": " + err.what();
      result.reason = Termination::solver_failure;
      result.final_design = design;
      return result;
    }
    rec.compliance = objective(load_case, u);
    rec.solver_iterations = stats.iterations;
    rec.solver_residual = stats.rel_residual;

    last_energies = element_energies(grid, dofmap, design, config.material, u);
    DesignField next = select_top_k(last_energies, budget);
    rec.changed = hamming_distance(next, design);
    rec.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    result.history.push_back(rec);
    if (on_iteration) on_iteration(rec, next);

    const bool at_target = budget == target;
    if (rec.changed == 0 && at_target && prev_at_target) {
      result.reason = Termination::converged;
      result.final_design = next;
      break;
    }

    // 2-cycle guard: exact re-selection can alternate between two designs
    // of equal volume once the budget is pinned at the target.
    if (at_target && prev_at_target && rec.changed > 0 && next == two_back) {
      ++cycle_run;
    } else {
      cycle_run = 0;
    }
    if (cycle_run >= 10) {
      result.reason = Termination::converged_cycle;
      const auto& hist = result.history;
      const double c_prev = hist[hist.size() - 2].compliance;  // compliance of rho^{k-2}
      const double c_curr = hist.back().compliance;            // compliance of rho^{k-1}
      result.final_design = c_curr <= c_prev ? design : next;
      break;
    }

    two_back = design;
    design = next;
    prev_at_target = at_target;
    result.final_design = design;
  }

  if (config.symmetry && result.reason != Termination::solver_failure) {
    const int axis = 1;
    const HalfSide keep = last_energies.empty()
                              ? HalfSide::high
                              : richer_half(last_energies, grid, axis);
    result.final_design = apply_symmetry(result.final_design, grid, axis, keep);
  }
  return result;
}

namespace {

int axis_extent(const Grid& grid, int axis) {
  switch (axis) {
    case 0: return grid.nelx;
    case 1: return grid.nely;
    case 2: if (grid.is_3d()) return grid.nelz; break;
  }
  throw std::invalid_argument("symmetry axis out of range for this grid");
}

int axis_coord(int axis, int x, int y, int z) { return axis == 0 ? x : axis == 1 ? y : z; }

}  // namespace

DesignField apply_symmetry(const DesignField& design, const Grid& grid, int axis,
                           HalfSide keep) {
  if (design.size() != grid.n_elements())
    throw std::invalid_argument("apply_symmetry: design/grid size mismatch");
  const int extent = axis_extent(grid, axis);
  DesignField out = design;
  for (int e = 0; e < design.size(); ++e) {
    int x, y, z;
    grid.element_coords(e, x, y, z);
    const int c = axis_coord(axis, x, y, z);
    const int mirrored = extent - 1 - c;
    const bool in_kept_half = keep == HalfSide::low ? c < extent - 1 - c : c > extent - 1 - c;
    if (!in_kept_half && mirrored != c) {
      int mx = x, my = y, mz = z;
      (axis == 0 ? mx : axis == 1 ? my : mz) = mirrored;
      out.set(e, design.is_solid(grid.element_index(mx, my, mz)));
    }
  }
  return out;
}

HalfSide richer_half(const std::vector<double>& values, const Grid& grid, int axis) {
  if (static_cast<int>(values.size()) != grid.n_elements())
    throw std::invalid_argument("richer_half: values/grid size mismatch");
  const int extent = axis_extent(grid, axis);
  double low = 0.0, high = 0.0;
  for (int e = 0; e < static_cast<int>(values.size()); ++e) {
    int x, y, z;
    grid.element_coords(e, x, y, z);
    const int c = axis_coord(axis, x, y, z);
    if (c < extent - 1 - c)
      low += values[e];
    else if (c > extent - 1 - c)
      high += values[e];
  }
  return low > high ? HalfSide::low : HalfSide::high;
}

int checkerboard_score(const DesignField& design, const Grid& grid) {
  if (grid.is_3d())
    throw std::logic_error("checkerboard_score: unsupported for 3D grids");
  if (design.size() != grid.n_elements())
    throw std::invalid_argument("checkerboard_score: design/grid size mismatch");
  int count = 0;
  for (int x = 0; x + 1 < grid.nelx; ++x)
    for (int y = 0; y + 1 < grid.nely; ++y) {
      const bool a = design.is_solid(grid.element_index(x, y));
      const bool b = design.is_solid(grid.element_index(x + 1, y));
      const bool c = design.is_solid(grid.element_index(x, y + 1));
      const bool d = design.is_solid(grid.element_index(x + 1, y + 1));
      count += a == d && b == c && a != b;
    }
  return count;
}

}  // namespace topokit
