#pragma once

#include <functional>
#include <utility>

namespace posbuild {

/// A position curve on [0,1] with its analytic first derivative, so the
/// quadrature cost oracle never needs finite differencing.
struct Curve {
  std::function<double(double)> value;
  std::function<double(double)> deriv;

  double operator()(double t) const { return value(t); }
};

enum class PassiveKind { risk_neutral, risk_averse, eager };

/// Parameters of a passive (non-competitive) strategy family. `sigma` is the
/// risk-aversion or eagerness parameter and is ignored for risk_neutral.
struct PassiveSpec {
  PassiveKind kind = PassiveKind::risk_neutral;
  double sigma = 1.0;
};

/// risk_neutral: t; risk_averse: sinh(sigma t)/sinh(sigma);
/// eager: (e^{-sigma t}-1)/(e^{-sigma}-1).
Curve passive(const PassiveSpec& spec);

/// Best response to a lambda-scaled risk-neutral adversary:
/// t -> (1 + lambda kappa/4) t - (lambda kappa/4) t^2.
Curve best_response_risk_neutral(double kappa, double lambda);

/// Auxiliary function sinh(sigma t)/sinh(sigma) + (kappa/sigma) cosh(sigma t)/sinh(sigma).
double q_sigma(double t, double sigma, double kappa);

/// Best response to a lambda-scaled risk-averse adversary with parameter sigma.
Curve best_response_risk_averse(double kappa, double lambda, double sigma);

/// Best response to a lambda-scaled eager adversary with parameter sigma.
/// Endpoint conditions f(0)=0, f(1)=1 are verified at construction (1e-9).
Curve best_response_eager(double kappa, double lambda, double sigma);

/// The unconstrained two-trader equilibrium pair (a_eq, b_eq) as unit curves.
/// kappa = 0 returns the analytic limit (t, t).
std::pair<Curve, Curve> equilibrium_pair(double kappa, double lambda);

}  // namespace posbuild
