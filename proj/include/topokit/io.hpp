#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "topokit/assembly.hpp"
#include "topokit/design.hpp"
#include "topokit/grid.hpp"
#include "topokit/optimizer.hpp"

namespace topokit {

// Plain-text PGM (P2), width nelx, height nely, maxval 255. Solid
// elements are black (0), void white (255); row 0 is the top of the
// domain. For a 3D grid one slice per z is written, with "_z<k>"
// appended to the stem (design.pgm -> design_z0.pgm, ...).
void export_design_image(const DesignField& design, const Grid& grid,
                         const std::filesystem::path& path);

// nely rows by nelx columns of comma-separated 0/1, same orientation as
// the image; 3D grids get one block per z slice separated by blank lines.
void export_density_csv(const DesignField& design, const Grid& grid,
                        const std::filesystem::path& path);

// Parses a density CSV back into a grid (dims inferred from the shape)
// and design. Exact inverse of export_density_csv.
struct CsvDesign {
  Grid grid;
  DesignField design;
};
CsvDesign read_density_csv(const std::filesystem::path& path);

// One JSON object per line:
// {"iter":..,"vol_frac":..,"compliance":..,"changed":..,"solver_iters":..,"wall_ms":..}
void write_iteration_log(const std::vector<IterationRecord>& records,
                         const std::filesystem::path& path);

// Run summary: termination reason, totals, final compliance/volume.
void write_summary(const RunResult& result, const RunConfig& config,
                   const std::filesystem::path& path);

// Per-iteration console line: " It.:  12 Vol.: 0.7153 Obj.:  210.1375 ch.:   86".
std::string format_iteration_line(const IterationRecord& rec);

// Optional-valued configuration fragment; unset fields fall back to the
// layer below (flags > config file > defaults).
struct ConfigValues {
  std::optional<std::string> problem;
  std::optional<int> nelx, nely, nelz;
  std::optional<double> volfrac, mu;
  std::optional<double> p, emin, nu;
  std::optional<std::string> solver;  // "cg" | "dense"
  std::optional<double> tol;
  std::optional<int> max_iters;
  std::optional<bool> symmetry;
  std::optional<std::string> load_case_file;
};

// Reads a JSON config file. Unknown keys are rejected so typos surface.
ConfigValues parse_config_file(const std::filesystem::path& path);

// Layers overrides on top of base, fills in defaults, validates ranges.
// Validation errors name the offending field.
RunConfig resolve_config(const ConfigValues& base, const ConfigValues& overrides);

// Custom load case JSON: {"fixed_dofs":[...], "loads":[[dof, value], ...]}
// with 0-based global DOF indices (see grid.hpp for the numbering).
LoadCase parse_load_case_file(const std::filesystem::path& path, const Grid& grid);

}  // namespace topokit
