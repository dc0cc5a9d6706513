#include "posbuild/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

namespace posbuild {

namespace {

constexpr double kDivergenceCeiling = 1e3;  // sup-norm blow-up cutoff

void check_params(const EquilibriumParams& p) {
  if (p.kappa < 0.0) throw std::domain_error("kappa must be >= 0");
  if (!(p.lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (p.n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
  if (!(p.gamma > 0.0 && p.gamma <= 1.0))
    throw std::domain_error("gamma must lie in (0, 1]");
  if (!(p.tolerance > 0.0)) throw std::domain_error("tolerance must be positive");
}

bool finite(double v) { return std::isfinite(v); }

}  // namespace

std::pair<double, double> cost_pair(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                    double kappa, double lambda) {
  const int n = static_cast<int>(a.size());
  const StrategyCoeffs b_strat(b, lambda);
  const StrategyCoeffs a_strat(a, 1.0);
  const double ca = evaluate(assemble_cost_a(b_strat, kappa, n), a);
  const double cb = evaluate(assemble_cost_b(a_strat, kappa, lambda, n), b);
  return {ca, cb};
}

std::pair<Eigen::VectorXd, SolverReport> best_response_step(
    Side own, const Eigen::VectorXd& opponent_coeffs, const EquilibriumParams& params) {
  check_params(params);
  if (opponent_coeffs.size() != params.n_terms)
    throw std::invalid_argument("best_response_step: opponent coefficient size mismatch");
  QuadraticCost qc;
  ConstraintSystem cs;
  if (own == Side::A) {
    qc = assemble_cost_a(StrategyCoeffs(opponent_coeffs, params.lambda), params.kappa,
                         params.n_terms);
    cs = compile(params.constraints_a, params.n_terms);
  } else {
    qc = assemble_cost_b(StrategyCoeffs(opponent_coeffs, 1.0), params.kappa, params.lambda,
                         params.n_terms);
    cs = compile(params.constraints_b, params.n_terms);
  }
  return solve(qc, cs, params.qp);
}

EquilibriumResult run(const EquilibriumParams& params) {
  check_params(params);
  const int n = params.n_terms;

  Eigen::VectorXd a = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd b =
      params.initial_b.size() == 0 ? Eigen::VectorXd::Zero(n) : params.initial_b;
  if (b.size() != n) throw std::invalid_argument("run: initial_b size mismatch");

  EquilibriumResult result;
  std::tie(result.trace.cost_a_init, result.trace.cost_b_init) =
      cost_pair(a, b, params.kappa, params.lambda);

  EquilibriumParams step_params = params;
  auto finish = [&](EqStatus status) {
    result.trace.status = status;
    result.a = StrategyCoeffs(a, 1.0);
    result.b = StrategyCoeffs(b, params.lambda);
    return result;
  };

  for (int k = 1; k <= params.max_iterations; ++k) {
    // Step k(i): A's relaxed best response to b^(k-1).
    step_params.qp.warm_start = a;
    auto [a_br, rep_a] = best_response_step(Side::A, b, step_params);
    if (rep_a.status != QpStatus::optimal) return finish(EqStatus::qp_failure);
    const Eigen::VectorXd a_new = params.gamma * a_br + (1.0 - params.gamma) * a;

    IterationRecord rec;
    rec.k = k;
    std::tie(rec.cost_a_step_i, rec.cost_b_step_i) =
        cost_pair(a_new, b, params.kappa, params.lambda);

    // Step k(ii): B's relaxed best response to a^(k).
    step_params.qp.warm_start = b;
    auto [b_br, rep_b] = best_response_step(Side::B, a_new, step_params);
    if (rep_b.status != QpStatus::optimal) {
      result.trace.iterations.push_back(std::move(rec));
      return finish(EqStatus::qp_failure);
    }
    const Eigen::VectorXd b_new = params.gamma * b_br + (1.0 - params.gamma) * b;

    std::tie(rec.cost_a_step_ii, rec.cost_b_step_ii) =
        cost_pair(a_new, b_new, params.kappa, params.lambda);
    rec.delta_a = (a_new - a).lpNorm<Eigen::Infinity>();
    rec.delta_b = (b_new - b).lpNorm<Eigen::Infinity>();
    rec.a = a_new;
    rec.b = b_new;

    a = a_new;
    b = b_new;
    const bool blown_up = a.lpNorm<Eigen::Infinity>() > kDivergenceCeiling ||
                          b.lpNorm<Eigen::Infinity>() > kDivergenceCeiling ||
                          !finite(rec.cost_a_step_ii) || !finite(rec.cost_b_step_ii);
    result.trace.iterations.push_back(std::move(rec));
    if (blown_up) return finish(EqStatus::diverged);
    const IterationRecord& last = result.trace.iterations.back();
    if (std::max(last.delta_a, last.delta_b) < params.tolerance)
      return finish(EqStatus::converged);
  }
  return finish(EqStatus::max_iterations);
}

double fixed_point_residual(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                            const EquilibriumParams& params) {
  auto [a_br, rep_a] = best_response_step(Side::A, b, params);
  auto [b_br, rep_b] = best_response_step(Side::B, a, params);
  if (rep_a.status != QpStatus::optimal || rep_b.status != QpStatus::optimal)
    throw std::runtime_error("fixed_point_residual: QP solve failed");
  return std::max((a - a_br).lpNorm<Eigen::Infinity>(),
                  (b - b_br).lpNorm<Eigen::Infinity>());
}

}  // namespace posbuild
