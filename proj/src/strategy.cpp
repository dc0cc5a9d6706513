#include "posbuild/strategy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "posbuild/quadrature.hpp"

namespace posbuild {

namespace {
constexpr double kPi = std::numbers::pi;

void check_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("time must lie in [0,1]");
}
}  // namespace

StrategyCoeffs::StrategyCoeffs(Eigen::VectorXd c, double s) : coeffs(std::move(c)), scale(s) {
  if (!(scale > 0.0)) throw std::domain_error("scale must be positive");
  if (coeffs.size() < 1) throw std::invalid_argument("need at least one coefficient");
}

StrategyCoeffs StrategyCoeffs::zero(int n_terms, double scale) {
  return StrategyCoeffs(Eigen::VectorXd::Zero(n_terms), scale);
}

double reconstruct(const StrategyCoeffs& s, double t) {
  check_time(t);
  double acc = t;
  for (int n = 1; n <= s.n_terms(); ++n) acc += s.coeffs[n - 1] * std::sin(n * kPi * t);
  return acc;
}

double derivative_at(const StrategyCoeffs& s, double t) {
  check_time(t);
  double acc = 1.0;
  for (int n = 1; n <= s.n_terms(); ++n)
    acc += s.coeffs[n - 1] * n * kPi * std::cos(n * kPi * t);
  return acc;
}

StrategyCoeffs fit_from_function(const std::function<double(double)>& f, int n_terms,
                                 double scale) {
  if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
  if (std::abs(f(0.0)) > 1e-9 || std::abs(f(1.0) - 1.0) > 1e-9)
    throw std::invalid_argument("fit_from_function: f must satisfy f(0)=0, f(1)=1");
  Eigen::VectorXd c(n_terms);
  for (int n = 1; n <= n_terms; ++n) {
    auto integrand = [&f, n](double t) { return (f(t) - t) * std::sin(n * kPi * t); };
    c[n - 1] = 2.0 * simpson_checked(integrand, 0.0, 1.0, 2001, 1e-10);
  }
  return StrategyCoeffs(std::move(c), scale);
}

StrategyCoeffs convex_combine(const StrategyCoeffs& s1, const StrategyCoeffs& s2,
                              double gamma) {
  if (s1.n_terms() != s2.n_terms() || s1.scale != s2.scale)
    throw std::invalid_argument("convex_combine: mismatched n_terms or scale");
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw std::domain_error("convex_combine: gamma must lie in [0,1]");
  return StrategyCoeffs(gamma * s1.coeffs + (1.0 - gamma) * s2.coeffs, s1.scale);
}

double l2_distance(const StrategyCoeffs& s1, const StrategyCoeffs& s2) {
  if (s1.n_terms() != s2.n_terms())
    throw std::invalid_argument("l2_distance: mismatched n_terms");
  return std::sqrt((s1.coeffs - s2.coeffs).squaredNorm() / 2.0);
}

double l2_distance(const std::function<double(double)>& f,
                   const std::function<double(double)>& g) {
  auto sq = [&](double t) {
    const double d = f(t) - g(t);
    return d * d;
  };
  return std::sqrt(simpson_checked(sq, 0.0, 1.0, 4001, 1e-10));
}

}  // namespace posbuild
