#include "posbuild/analysis.hpp"

#include "posbuild/closed_forms.hpp"

namespace posbuild {

ComparisonReport compare_to_closed_form(const StrategyCoeffs& a, const StrategyCoeffs& b,
                                        double kappa, double lambda) {
  ComparisonReport rep;
  rep.kappa = kappa;
  rep.lambda = lambda;
  const auto [a_eq, b_eq] = equilibrium_pair(kappa, lambda);
  rep.l2_a = l2_distance([&a](double t) { return reconstruct(a, t); }, a_eq.value);
  rep.l2_b = l2_distance([&b](double t) { return reconstruct(b, t); }, b_eq.value);
  return rep;
}

ComparisonReport compare_to_closed_form(const StrategyCoeffs& a, const StrategyCoeffs& b,
                                        double kappa, double lambda,
                                        const EquilibriumTrace& trace) {
  ComparisonReport rep = compare_to_closed_form(a, b, kappa, lambda);
  rep.cost_a_init = trace.cost_a_init;
  rep.cost_b_init = trace.cost_b_init;
  rep.iterations = static_cast<int>(trace.iterations.size());
  if (!trace.iterations.empty()) {
    rep.cost_a_final = trace.iterations.back().cost_a_step_ii;
    rep.cost_b_final = trace.iterations.back().cost_b_step_ii;
  } else {
    rep.cost_a_final = trace.cost_a_init;
    rep.cost_b_final = trace.cost_b_init;
  }
  return rep;
}

std::vector<StateSpacePoint> state_space_series(const EquilibriumTrace& trace) {
  std::vector<StateSpacePoint> out;
  if (trace.iterations.empty()) return out;
  out.reserve(1 + 2 * trace.iterations.size());
  out.push_back({StateSpacePhase::init, 0, trace.cost_a_init, trace.cost_b_init});
  for (const IterationRecord& rec : trace.iterations) {
    out.push_back({StateSpacePhase::step_i, rec.k, rec.cost_a_step_i, rec.cost_b_step_i});
    out.push_back({StateSpacePhase::step_ii, rec.k, rec.cost_a_step_ii, rec.cost_b_step_ii});
  }
  return out;
}

}  // namespace posbuild
