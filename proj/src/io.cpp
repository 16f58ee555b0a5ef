#include "topokit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace topokit {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::filesystem::path slice_path(const std::filesystem::path& path, int z) {
  std::filesystem::path p = path;
  const std::string stem = p.stem().string();
  const std::string ext = p.extension().string();
  p.replace_filename(stem + "_z" + std::to_string(z) + ext);
  return p;
}

void write_pgm_slice(const DesignField& design, const Grid& grid, int z,
                     const std::filesystem::path& path) {
  auto out = open_out(path);
  out << "P2\n" << grid.nelx << " " << grid.nely << "\n255\n";
  for (int y = 0; y < grid.nely; ++y) {
    for (int x = 0; x < grid.nelx; ++x) {
      if (x) out << ' ';
      out << (design.is_solid(grid.element_index(x, y, z)) ? 0 : 255);
    }
    out << '\n';
  }
}

void write_csv_slice(std::ofstream& out, const DesignField& design, const Grid& grid,
                     int z) {
  for (int y = 0; y < grid.nely; ++y) {
    for (int x = 0; x < grid.nelx; ++x) {
      if (x) out << ',';
      out << (design.is_solid(grid.element_index(x, y, z)) ? 1 : 0);
    }
    out << '\n';
  }
}

}  // namespace

void export_design_image(const DesignField& design, const Grid& grid,
                         const std::filesystem::path& path) {
  if (design.size() != grid.n_elements())
    throw std::invalid_argument("export_design_image: design/grid size mismatch");
  if (!grid.is_3d()) {
    write_pgm_slice(design, grid, 0, path);
    return;
  }
  for (int z = 0; z < grid.nelz; ++z) write_pgm_slice(design, grid, z, slice_path(path, z));
}

void export_density_csv(const DesignField& design, const Grid& grid,
                        const std::filesystem::path& path) {
  if (design.size() != grid.n_elements())
    throw std::invalid_argument("export_density_csv: design/grid size mismatch");
  auto out = open_out(path);
  const int nz = grid.is_3d() ? grid.nelz : 1;
  for (int z = 0; z < nz; ++z) {
    if (z) out << '\n';
    write_csv_slice(out, design, grid, z);
  }
}

CsvDesign read_density_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());

  std::vector<std::vector<std::vector<std::uint8_t>>> blocks(1);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      if (!blocks.back().empty()) blocks.emplace_back();
      continue;
    }
    std::vector<std::uint8_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      if (cell == "0")
        row.push_back(0);
      else if (cell == "1")
        row.push_back(1);
      else
        throw std::runtime_error(path.string() + ": cell '" + cell + "' is not 0 or 1");
    }
    blocks.back().push_back(std::move(row));
  }
  if (!blocks.empty() && blocks.back().empty()) blocks.pop_back();
  if (blocks.empty() || blocks[0].empty())
    throw std::runtime_error(path.string() + ": empty density CSV");

  const int nely = static_cast<int>(blocks[0].size());
  const int nelx = static_cast<int>(blocks[0][0].size());
  for (const auto& block : blocks) {
    if (static_cast<int>(block.size()) != nely)
      throw std::runtime_error(path.string() + ": inconsistent slice heights");
    for (const auto& row : block)
      if (static_cast<int>(row.size()) != nelx)
        throw std::runtime_error(path.string() + ": ragged rows");
  }

  CsvDesign out;
  const int nelz = static_cast<int>(blocks.size());
  out.grid = nelz > 1 ? build_grid_3d(nelx, nely, nelz) : build_grid_2d(nelx, nely);
  DesignField d(out.grid.n_elements(), false);
  for (int z = 0; z < nelz; ++z)
    for (int y = 0; y < nely; ++y)
      for (int x = 0; x < nelx; ++x)
        if (blocks[z][y][x]) d.set(out.grid.element_index(x, y, z), true);
  out.design = d;
  return out;
}

void write_iteration_log(const std::vector<IterationRecord>& records,
                         const std::filesystem::path& path) {
  auto out = open_out(path);
  for (const auto& r : records) {
    json j{{"iter", r.iteration},
           {"vol_frac", r.vol_frac},
           {"compliance", r.compliance},
           {"changed", r.changed},
           {"solver_iters", r.solver_iterations},
           {"wall_ms", r.wall_ms}};
    out << j.dump() << '\n';
  }
}

void write_summary(const RunResult& result, const RunConfig& config,
                   const std::filesystem::path& path) {
  json j{{"problem", config.problem},
         {"nelx", config.nelx},
         {"nely", config.nely},
         {"nelz", config.nelz},
         {"volfrac", config.volfrac},
         {"mu", config.mu},
         {"termination", to_string(result.reason)},
         {"total_iters", result.total_iterations()},
         {"final_compliance", result.final_compliance()},
         {"final_solid_count", result.final_design.solid_count()},
         {"final_volume_fraction", result.final_design.volume_fraction()}};
  if (!result.error.empty()) j["error"] = result.error;
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

std::string format_iteration_line(const IterationRecord& rec) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), " It.:%4d Vol.: %.4f Obj.: %9.4f ch.: %5d",
                rec.iteration, rec.vol_frac, rec.compliance, rec.changed);
  return buf;
}

namespace {

template <typename T>
void read_field(const json& j, const char* key, std::optional<T>& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

template <typename T>
T pick(const std::optional<T>& override_v, const std::optional<T>& base_v, T fallback) {
  return override_v ? *override_v : base_v ? *base_v : fallback;
}

}  // namespace

ConfigValues parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("config file " + path.string() + ": " + e.what());
  }
  static const char* known[] = {"problem", "nelx",  "nely",      "nelz",     "volfrac",
                                "mu",      "p",     "emin",      "nu",       "solver",
                                "tol",     "max_iters", "symmetry", "load_case_file"};
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::runtime_error("config file: unknown key '" + key + "'");
  }
  ConfigValues v;
  try {
    read_field(j, "problem", v.problem);
    read_field(j, "nelx", v.nelx);
    read_field(j, "nely", v.nely);
    read_field(j, "nelz", v.nelz);
    read_field(j, "volfrac", v.volfrac);
    read_field(j, "mu", v.mu);
    read_field(j, "p", v.p);
    read_field(j, "emin", v.emin);
    read_field(j, "nu", v.nu);
    read_field(j, "solver", v.solver);
    read_field(j, "tol", v.tol);
    read_field(j, "max_iters", v.max_iters);
    read_field(j, "symmetry", v.symmetry);
    read_field(j, "load_case_file", v.load_case_file);
  } catch (const json::exception& e) {
    throw std::runtime_error("config file " + path.string() + ": " + e.what());
  }
  return v;
}

RunConfig resolve_config(const ConfigValues& base, const ConfigValues& overrides) {
  const RunConfig defaults;
  RunConfig c;
  c.problem = pick(overrides.problem, base.problem, defaults.problem);
  c.nelx = pick(overrides.nelx, base.nelx, defaults.nelx);
  c.nely = pick(overrides.nely, base.nely, defaults.nely);
  c.nelz = pick(overrides.nelz, base.nelz, defaults.nelz);
  c.volfrac = pick(overrides.volfrac, base.volfrac, defaults.volfrac);
  c.mu = pick(overrides.mu, base.mu, defaults.mu);
  c.material.p = pick(overrides.p, base.p, defaults.material.p);
  c.material.Emin = pick(overrides.emin, base.emin, defaults.material.Emin);
  c.material.nu = pick(overrides.nu, base.nu, defaults.material.nu);
  c.solver.tol = pick(overrides.tol, base.tol, defaults.solver.tol);
  c.max_outer_iterations = pick(overrides.max_iters, base.max_iters,
                                defaults.max_outer_iterations);
  c.symmetry = pick(overrides.symmetry, base.symmetry, defaults.symmetry);

  const std::string solver = pick(overrides.solver, base.solver, std::string("cg"));
  if (solver == "cg")
    c.solver.method = SolverMethod::cg;
  else if (solver == "dense")
    c.solver.method = SolverMethod::dense;
  else
    throw std::invalid_argument("solver must be 'cg' or 'dense', got '" + solver + "'");

  c.validate();

  const auto lc_file = overrides.load_case_file ? overrides.load_case_file
                                                : base.load_case_file;
  if (lc_file) c.custom_load_case = parse_load_case_file(*lc_file, c.make_grid());
  return c;
}

LoadCase parse_load_case_file(const std::filesystem::path& path, const Grid& grid) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read load case file " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("load case file " + path.string() + ": " + e.what());
  }
  LoadCase lc;
  try {
    for (const auto& d : j.at("fixed_dofs")) lc.fixed_dofs.push_back(d.get<int>());
    for (const auto& pair : j.at("loads")) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::runtime_error("load case file: each load must be [dof, value]");
      lc.loads.push_back({pair[0].get<int>(), pair[1].get<double>()});
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("load case file " + path.string() + ": " + e.what());
  }
  lc.validate(grid);
  return lc;
}

}  // namespace topokit
