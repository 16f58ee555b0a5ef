#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "topokit/io.hpp"
#include "topokit/optimizer.hpp"
#include "topokit/problems.hpp"

namespace {

int cmd_run(const topokit::ConfigValues& flags, const std::optional<std::string>& config_file,
            const std::string& out_dir, bool quiet) {
  namespace fs = std::filesystem;
  topokit::ConfigValues base;
  if (config_file) base = topokit::parse_config_file(*config_file);
  const topokit::RunConfig config = topokit::resolve_config(base, flags);

  const auto on_iteration = [&](const topokit::IterationRecord& rec,
                                const topokit::DesignField&) {
    if (!quiet) std::cout << topokit::format_iteration_line(rec) << "\n";
  };
  const topokit::RunResult result = topokit::run(config, on_iteration);

  const fs::path out(out_dir);
  topokit::export_design_image(result.final_design, result.grid, out / "design.pgm");
  topokit::export_density_csv(result.final_design, result.grid, out / "design.csv");
  topokit::write_iteration_log(result.history, out / "iterations.jsonl");
  topokit::write_summary(result, config, out / "summary.json");

  if (!quiet) {
    std::cout << "termination: " << topokit::to_string(result.reason)
              << "  iterations: " << result.total_iterations()
              << "  compliance: " << result.final_compliance()
              << "  solids: " << result.final_design.solid_count() << "/"
              << result.final_design.size() << "\n";
  }
  switch (result.reason) {
    case topokit::Termination::converged:
    case topokit::Termination::converged_cycle:
      return 0;
    case topokit::Termination::max_iterations:
      return 2;
    case topokit::Termination::solver_failure:
      std::cerr << "error: " << result.error << "\n";
      return 1;
  }
  return 1;
}

int cmd_score(const std::string& csv_path) {
  const topokit::CsvDesign loaded = topokit::read_density_csv(csv_path);
  std::cout << "elements: " << loaded.design.size() << "\n"
            << "solid: " << loaded.design.solid_count() << "\n"
            << "volume_fraction: " << loaded.design.volume_fraction() << "\n";
  if (!loaded.grid.is_3d())
    std::cout << "checkerboard_windows: "
              << topokit::checkerboard_score(loaded.design, loaded.grid) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topokit: bilevel-knapsack topology optimization"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "optimize a design");
  topokit::ConfigValues flags;
  std::optional<std::string> config_file;
  std::string out_dir = "out";
  bool quiet = false;
  run->add_option("--problem", flags.problem, "preset: mbb | cantilever2d | cantilever3d");
  run->add_option("--nelx", flags.nelx, "elements along x");
  run->add_option("--nely", flags.nely, "elements along y");
  run->add_option("--nelz", flags.nelz, "elements along z (3D runs)");
  run->add_option("--volfrac", flags.volfrac, "target volume fraction in (0, 1]");
  run->add_option("--mu", flags.mu, "per-iteration volume reduction factor in (0, 1)");
  run->add_option("--p", flags.p, "penalty exponent (> 1; does not change the design)");
  run->add_option("--emin", flags.emin, "ersatz modulus of void elements");
  run->add_option("--nu", flags.nu, "Poisson ratio");
  run->add_option("--solver", flags.solver, "cg | dense");
  run->add_option("--tol", flags.tol, "solver relative residual tolerance");
  run->add_option("--max-iters", flags.max_iters, "outer iteration cap");
  run->add_flag("--symmetry", [&flags](std::int64_t) { flags.symmetry = true; },
                "mirror the final design about the horizontal midplane");
  run->add_option("--loadcase", flags.load_case_file,
                  "JSON load case file overriding the preset");
  run->add_option("--config", config_file, "JSON config file (flags win)");
  run->add_option("--out", out_dir, "output directory (default: out)");
  run->add_flag("--quiet", quiet, "suppress per-iteration output");

  auto* score = app.add_subcommand("score", "volume / checkerboard metrics of a density CSV");
  std::string csv_path;
  score->add_option("--csv", csv_path, "density CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(flags, config_file, out_dir, quiet);
    if (score->parsed()) return cmd_score(csv_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
