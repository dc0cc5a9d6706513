#include <doctest.h>

#include "posbuild/analysis.hpp"

using namespace posbuild;

TEST_CASE("empty trace gives an empty state-space series") {
  EquilibriumTrace trace;
  trace.cost_a_init = 27.0;
  trace.cost_b_init = 27.0;
  CHECK(state_space_series(trace).empty());
}

TEST_CASE("series layout: init point then two points per iteration") {
  EquilibriumParams p;
  p.kappa = 1.0;
  p.lambda = 5.0;
  p.n_terms = 10;
  p.gamma = 0.8;
  const EquilibriumResult res = run(p);
  const auto series = state_space_series(res.trace);
  REQUIRE(series.size() == 1 + 2 * res.trace.iterations.size());
  CHECK(series[0].phase == StateSpacePhase::init);
  CHECK(series[0].cost_a == doctest::Approx(9.0));
  CHECK(series[1].phase == StateSpacePhase::step_i);
  CHECK(series[1].iteration == 1);
  CHECK(series[2].phase == StateSpacePhase::step_ii);
  CHECK(series.back().phase == StateSpacePhase::step_ii);
}

TEST_CASE("strong-impact path: init at (27, 27), first step near (22, 32)") {
  EquilibriumParams p;
  p.kappa = 25.0;
  p.lambda = 1.0;
  p.n_terms = 35;
  p.gamma = 0.2;
  p.tolerance = 1e-5;
  p.max_iterations = 200;
  const EquilibriumResult res = run(p);
  REQUIRE(res.trace.status == EqStatus::converged);
  const auto series = state_space_series(res.trace);
  CHECK(series[0].cost_a == doctest::Approx(27.0));
  CHECK(series[0].cost_b == doctest::Approx(27.0));
  // A undercuts first, B pays for it
  CHECK(series[1].cost_a == doctest::Approx(22.3).epsilon(0.05));
  CHECK(series[1].cost_b == doctest::Approx(32.2).epsilon(0.05));
  // no collusion: both finish above the risk-neutral starting cost
  CHECK(series.back().cost_a > 27.0);
  CHECK(series.back().cost_b > 27.0);
}

TEST_CASE("comparison report carries parameters and costs") {
  EquilibriumParams p;
  p.kappa = 1.0;
  p.lambda = 5.0;
  p.n_terms = 12;
  const EquilibriumResult res = run(p);
  const ComparisonReport cmp = compare_to_closed_form(res.a, res.b, 1.0, 5.0, res.trace);
  CHECK(cmp.kappa == 1.0);
  CHECK(cmp.lambda == 5.0);
  CHECK(cmp.cost_a_init == doctest::Approx(9.0));
  CHECK(cmp.cost_a_final < cmp.cost_a_init);
  CHECK(cmp.cost_b_final > cmp.cost_b_init);
  CHECK(cmp.l2_a < 1e-3);
}
