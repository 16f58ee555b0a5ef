#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "topokit/knapsack.hpp"
#include "topokit/optimizer.hpp"

using namespace topokit;

namespace {

RunConfig small_mbb() {
  RunConfig c;
  c.problem = "mbb";
  c.nelx = 12;
  c.nely = 4;
  c.volfrac = 0.5;
  c.mu = 0.97;
  c.solver.method = SolverMethod::dense;
  return c;
}

}  // namespace

TEST_CASE("a full-volume run converges after two no-op iterations") {
  RunConfig c = small_mbb();
  c.volfrac = 1.0;
  const RunResult r = run(c);
  CHECK(r.reason == Termination::converged);
  REQUIRE(r.total_iterations() == 2);
  CHECK(r.final_design.solid_count() == c.nelx * c.nely);
  for (const auto& rec : r.history) {
    CHECK(rec.changed == 0);
    CHECK(rec.budget == c.nelx * c.nely);
  }
}

TEST_CASE("a converged run lands exactly on the target volume") {
  const RunConfig c = small_mbb();
  const RunResult r = run(c);
  CHECK(r.reason == Termination::converged);
  CHECK(r.final_design.solid_count() == std::llround(c.nelx * c.nely * c.volfrac));
  CHECK(r.history.back().changed == 0);
  CHECK(r.history.back().compliance > 0.0);
}

TEST_CASE("per-iteration invariants: budget exactness, monotone schedule, binary purity") {
  const RunConfig c = small_mbb();
  int last_iter = 0;
  double last_vol = 1.0 + 1e-9;
  run(c, [&](const IterationRecord& rec, const DesignField& design) {
    CHECK(rec.iteration == last_iter + 1);
    last_iter = rec.iteration;
    CHECK(rec.vol_frac <= last_vol);
    last_vol = rec.vol_frac;
    CHECK(rec.budget == volume_budget(design.size(), c.volfrac, c.mu, rec.iteration));
    CHECK(design.solid_count() == rec.budget);
    for (std::uint8_t v : design.values()) CHECK((v == 0 || v == 1));
    CHECK(rec.compliance > 0.0);
  });
  CHECK(last_iter >= 2);
}

TEST_CASE("identical configs give bit-identical runs") {
  const RunConfig c = small_mbb();
  const RunResult a = run(c);
  const RunResult b = run(c);
  CHECK(a.total_iterations() == b.total_iterations());
  CHECK(a.final_design == b.final_design);
  for (int i = 0; i < a.total_iterations(); ++i)
    CHECK(a.history[i].compliance == b.history[i].compliance);
}

TEST_CASE("the cg path reaches the same design as the dense path here") {
  RunConfig c = small_mbb();
  const RunResult dense = run(c);
  c.solver.method = SolverMethod::cg;
  const RunResult cg = run(c);
  CHECK(dense.final_design == cg.final_design);
  CHECK(dense.total_iterations() == cg.total_iterations());
}

TEST_CASE("the iteration cap is reported as max-iterations") {
  RunConfig c = small_mbb();
  c.max_outer_iterations = 3;
  const RunResult r = run(c);
  CHECK(r.reason == Termination::max_iterations);
  CHECK(r.total_iterations() == 3);
  CHECK(r.final_design.solid_count() == volume_budget(c.nelx * c.nely, c.volfrac, c.mu, 3));
}

TEST_CASE("an unsolvable load case surfaces as solver failure with context") {
  RunConfig c = small_mbb();
  c.solver.method = SolverMethod::cg;
  LoadCase lc;
  lc.fixed_dofs = {0};  // rigid modes survive
  lc.loads = {{5, -1.0}};
  c.custom_load_case = lc;
  const RunResult r = run(c);
  CHECK(r.reason == Termination::solver_failure);
  CHECK(r.error.find("iteration 1") != std::string::npos);
  CHECK(r.history.empty());
}

TEST_CASE("config validation names the offending field") {
  RunConfig c = small_mbb();
  c.volfrac = 1.5;
  CHECK_THROWS_WITH_AS(run(c), "volfrac must be in (0, 1]", std::invalid_argument);
  c = small_mbb();
  c.mu = 1.0;
  CHECK_THROWS_AS(run(c), std::invalid_argument);
  c = small_mbb();
  c.problem = "bogus";
  CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("apply_symmetry: reflection semantics and idempotence") {
  const Grid g = build_grid_2d(2, 2);
  DesignField d(g.n_elements(), false);
  d.set(g.element_index(0, 0), true);  // top-left only

  const DesignField mirrored = apply_symmetry(d, g, 1, HalfSide::low);
  CHECK(mirrored.is_solid(g.element_index(0, 0)));
  CHECK(mirrored.is_solid(g.element_index(0, 1)));  // bottom-left filled in
  CHECK_FALSE(mirrored.is_solid(g.element_index(1, 0)));
  CHECK_FALSE(mirrored.is_solid(g.element_index(1, 1)));

  CHECK(apply_symmetry(mirrored, g, 1, HalfSide::low) == mirrored);
  CHECK(apply_symmetry(mirrored, g, 1, HalfSide::high) == mirrored);  // already symmetric

  std::mt19937 rng(3);
  const Grid g2 = build_grid_2d(5, 4);
  for (int trial = 0; trial < 10; ++trial) {
    DesignField r(g2.n_elements(), false);
    for (int e = 0; e < g2.n_elements(); ++e) r.set(e, rng() % 2 == 0);
    for (HalfSide keep : {HalfSide::low, HalfSide::high}) {
      const DesignField once = apply_symmetry(r, g2, 1, keep);
      CHECK(apply_symmetry(once, g2, 1, keep) == once);
      // mirror symmetry holds
      for (int x = 0; x < g2.nelx; ++x)
        for (int y = 0; y < g2.nely; ++y)
          CHECK(once.is_solid(g2.element_index(x, y)) ==
                once.is_solid(g2.element_index(x, g2.nely - 1 - y)));
    }
  }
}

TEST_CASE("apply_symmetry keeps the middle row of odd grids") {
  const Grid g = build_grid_2d(1, 3);
  DesignField d(g.n_elements(), false);
  d.set(g.element_index(0, 1), true);  // middle row only
  const DesignField out = apply_symmetry(d, g, 1, HalfSide::low);
  CHECK(out == d);
}

TEST_CASE("richer_half sums element values per half") {
  const Grid g = build_grid_2d(2, 4);
  std::vector<double> v(g.n_elements(), 1.0);
  v[g.element_index(0, 0)] = 5.0;  // top half heavier
  CHECK(richer_half(v, g, 1) == HalfSide::low);
  v[g.element_index(0, 3)] = 9.0;  // now bottom heavier
  CHECK(richer_half(v, g, 1) == HalfSide::high);
  // exact tie goes to the high-index (physically lower) half
  CHECK(richer_half(std::vector<double>(g.n_elements(), 1.0), g, 1) == HalfSide::high);
}

TEST_CASE("a symmetry-enabled cantilever run ends mirror-symmetric") {
  RunConfig c;
  c.problem = "cantilever2d";
  c.nelx = 16;
  c.nely = 6;
  c.volfrac = 0.5;
  c.mu = 0.97;
  c.symmetry = true;
  c.solver.method = SolverMethod::dense;
  const RunResult r = run(c);
  REQUIRE(r.reason == Termination::converged);
  const Grid g = r.grid;
  for (int x = 0; x < g.nelx; ++x)
    for (int y = 0; y < g.nely; ++y)
      CHECK(r.final_design.is_solid(g.element_index(x, y)) ==
            r.final_design.is_solid(g.element_index(x, g.nely - 1 - y)));
}

TEST_CASE("checkerboard score counts diagonal 2x2 windows") {
  {
    const Grid g = build_grid_2d(3, 3);
    CHECK(checkerboard_score(DesignField(9, true), g) == 0);
    CHECK(checkerboard_score(DesignField(9, false), g) == 0);
  }
  {
    const Grid g = build_grid_2d(2, 2);
    DesignField d(4, false);
    d.set(g.element_index(0, 0), true);
    d.set(g.element_index(1, 1), true);
    CHECK(checkerboard_score(d, g) == 1);
  }
  {
    const Grid g = build_grid_2d(4, 4);
    DesignField d(16, false);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if ((x + y) % 2 == 0) d.set(g.element_index(x, y), true);
    CHECK(checkerboard_score(d, g) == 9);
  }
  CHECK_THROWS_AS(checkerboard_score(DesignField(8, true), build_grid_3d(2, 2, 2)),
                  std::logic_error);
}
