#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topokit/assembly.hpp"
#include "topokit/design.hpp"
#include "topokit/grid.hpp"
#include "topokit/material.hpp"
#include "topokit/solve.hpp"

namespace topokit {

struct RunConfig {
  std::string problem = "mbb";
  int nelx = 60;
  int nely = 20;
  int nelz = 0;  // > 0 selects the 3D path
  double volfrac = 0.5;
  double mu = 0.97;
  MaterialModel material;
  SolverOptions solver;
  int max_outer_iterations = 1000;
  // Mirror the final design about the horizontal midplane, keeping the
  // half with the larger summed sensitivity.
  bool symmetry = false;
  // Replaces the preset's loads/supports when set.
  std::optional<LoadCase> custom_load_case;

  Grid make_grid() const;
  void validate() const;  // throws std::invalid_argument naming the field
};

struct IterationRecord {
  int iteration = 0;   // 1-based
  int budget = 0;      // allowed solid elements this iteration
  double vol_frac = 0.0;
  double compliance = 0.0;
  int changed = 0;     // Hamming distance to the previous design
  int solver_iterations = 0;
  double solver_residual = 0.0;
  double wall_ms = 0.0;
};

enum class Termination { converged, converged_cycle, max_iterations, solver_failure };

const char* to_string(Termination t);

struct RunResult {
  Grid grid;
  DesignField final_design;
  std::vector<IterationRecord> history;
  Termination reason = Termination::converged;
  std::string error;  // nonempty for solver_failure

  int total_iterations() const { return static_cast<int>(history.size()); }
  double final_compliance() const {
    return history.empty() ? 0.0 : history.back().compliance;
  }
};

// Runs the outer loop: starting from the all-solid design, each iteration
// shrinks the volume budget, solves equilibrium for the previous design,
// evaluates element energies and re-selects the top-budget elements. Stops
// once the design survives a full iteration unchanged at the target
// budget (both this and the previous iteration already at target), or on
// the iteration cap. A 2-cycle at the target budget that persists for 10
// consecutive iterations also stops the run, keeping the lower-compliance
// design of the alternating pair.
//
// on_iteration, if set, observes each record together with the design the
// knapsack step just selected.
using IterationCallback =
    std::function<void(const IterationRecord&, const DesignField&)>;
RunResult run(const RunConfig& config, const IterationCallback& on_iteration = {});

enum class HalfSide { low, high };  // low = smaller indices along the axis

// Mirrors the kept half onto the other about the axis midplane. For odd
// extents the middle slice stays as is. Idempotent; a design that is
// already mirror-symmetric is unchanged.
DesignField apply_symmetry(const DesignField& design, const Grid& grid, int axis,
                           HalfSide keep);

// Which half of the grid carries the larger summed value; ties go to the
// high-index (physically lower, for the y axis) half.
HalfSide richer_half(const std::vector<double>& values, const Grid& grid, int axis);

// Number of 2x2 element windows with an exactly diagonal solid/void
// pattern. 2D only; throws std::logic_error for 3D grids.
int checkerboard_score(const DesignField& design, const Grid& grid);

}  // namespace topokit
