#pragma once

#include <vector>

#include "posbuild/equilibrium.hpp"
#include "posbuild/strategy.hpp"

namespace posbuild {

struct ComparisonReport {
  double l2_a = 0.0;
  double l2_b = 0.0;
  double cost_a_init = 0.0;
  double cost_b_init = 0.0;
  double cost_a_final = 0.0;
  double cost_b_final = 0.0;
  int iterations = 0;
  double kappa = 0.0;
  double lambda = 1.0;
};

/// L2 distances of the reconstructed strategies to the closed-form two-trader
/// equilibrium, by quadrature (kappa = 0 compares against the (t, t) limit).
ComparisonReport compare_to_closed_form(const StrategyCoeffs& a, const StrategyCoeffs& b,
                                        double kappa, double lambda);

/// Same, with costs and iteration count filled in from a trace.
ComparisonReport compare_to_closed_form(const StrategyCoeffs& a, const StrategyCoeffs& b,
                                        double kappa, double lambda,
                                        const EquilibriumTrace& trace);

enum class StateSpacePhase { init, step_i, step_ii };

struct StateSpacePoint {
  StateSpacePhase phase;
  int iteration;  // 0 for init
  double cost_a;
  double cost_b;
};

/// The state-space polyline: init-guess point followed by the step-(i) and
/// step-(ii) cost pairs of every iteration.
std::vector<StateSpacePoint> state_space_series(const EquilibriumTrace& trace);

}  // namespace posbuild
