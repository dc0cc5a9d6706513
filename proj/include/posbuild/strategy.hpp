#pragma once

#include <Eigen/Dense>
#include <functional>

namespace posbuild {

/// A unit trading strategy on [0,1] stored as the sine-series deviation from
/// the straight line t: a(t) = t + sum_n coeffs[n-1] sin(n pi t).
/// Boundary values a(0)=0, a(1)=1 are structural. `scale` is the target
/// quantity multiple (lambda) and is applied by callers, not here.
struct StrategyCoeffs {
  Eigen::VectorXd coeffs;
  double scale = 1.0;

  StrategyCoeffs() = default;
  StrategyCoeffs(Eigen::VectorXd c, double s = 1.0);

  int n_terms() const { return static_cast<int>(coeffs.size()); }

  static StrategyCoeffs zero(int n_terms, double scale = 1.0);
};

/// Position at time t: t + sum a_n sin(n pi t). Throws std::domain_error
/// outside [0,1].
double reconstruct(const StrategyCoeffs& s, double t);

/// Trading rate at time t: 1 + sum a_n n pi cos(n pi t).
double derivative_at(const StrategyCoeffs& s, double t);

/// Fit sine coefficients a_n = 2 * int_0^1 (f(t)-t) sin(n pi t) dt by
/// composite Simpson with a Richardson check (abs error <= 1e-10 per
/// coefficient). f must satisfy f(0)=0, f(1)=1 within 1e-9.
StrategyCoeffs fit_from_function(const std::function<double(double)>& f, int n_terms,
                                 double scale = 1.0);

/// Coefficientwise gamma*s1 + (1-gamma)*s2. Requires matching n_terms and scale.
StrategyCoeffs convex_combine(const StrategyCoeffs& s1, const StrategyCoeffs& s2,
                              double gamma);

/// L2 norm of the reconstructed difference, via orthogonality:
/// sqrt( sum (a_n - a'_n)^2 / 2 ).
double l2_distance(const StrategyCoeffs& s1, const StrategyCoeffs& s2);

/// Quadrature variant for arbitrary callables: sqrt( int (f-g)^2 dt ).
double l2_distance(const std::function<double(double)>& f,
                   const std::function<double(double)>& g);

}  // namespace posbuild
