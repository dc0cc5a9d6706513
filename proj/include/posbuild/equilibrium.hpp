#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "posbuild/constraints.hpp"
#include "posbuild/cost.hpp"
#include "posbuild/qp.hpp"
#include "posbuild/strategy.hpp"

namespace posbuild {

enum class Side { A, B };

struct EquilibriumParams {
  double kappa = 0.0;
  double lambda = 1.0;
  int n_terms = 20;
  double gamma = 0.8;  // relaxation step in (0, 1]
  double tolerance = 1e-6;
  int max_iterations = 100;
  std::vector<ConstraintSpec> constraints_a;
  std::vector<ConstraintSpec> constraints_b;
  Eigen::VectorXd initial_b;  // empty = risk-neutral zero vector
  QpSettings qp;
};

enum class EqStatus { converged, diverged, max_iterations, qp_failure };

struct IterationRecord {
  int k = 0;
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  // State-space costs after step k(i) -- at (a^(k), b^(k-1)) -- and after
  // step k(ii) -- at (a^(k), b^(k)).
  double cost_a_step_i = 0.0;
  double cost_b_step_i = 0.0;
  double cost_a_step_ii = 0.0;
  double cost_b_step_ii = 0.0;
  double delta_a = 0.0;  // sup norm of coefficient change
  double delta_b = 0.0;
};

struct EquilibriumTrace {
  // Pre-initialization state-space point: costs of (zero, initial_b).
  double cost_a_init = 0.0;
  double cost_b_init = 0.0;
  std::vector<IterationRecord> iterations;
  EqStatus status = EqStatus::max_iterations;
};

struct EquilibriumResult {
  StrategyCoeffs a;
  StrategyCoeffs b;
  EquilibriumTrace trace;
};

/// One un-relaxed constrained best response: assembles the proper quadratic
/// (perspective A or B), compiles the own-side constraints and solves the QP.
std::pair<Eigen::VectorXd, SolverReport> best_response_step(
    Side own, const Eigen::VectorXd& opponent_coeffs, const EquilibriumParams& params);

/// Alternating two-trader best responses with gamma-relaxed interpolation in
/// coefficient space, from b^(0) = params.initial_b (zero by default).
EquilibriumResult run(const EquilibriumParams& params);

/// Equilibrium defect: max sup-norm distance of (a, b) from their mutual
/// un-relaxed best responses. Zero at a true (constrained) equilibrium.
double fixed_point_residual(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                            const EquilibriumParams& params);

/// Both cost values at a coefficient pair, with B's coefficients as unit
/// coefficients of the lambda-scaled trader.
std::pair<double, double> cost_pair(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                    double kappa, double lambda);

}  // namespace posbuild
