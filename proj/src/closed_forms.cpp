#include "posbuild/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace posbuild {

Curve passive(const PassiveSpec& spec) {
  switch (spec.kind) {
    case PassiveKind::risk_neutral:
      return {[](double t) { return t; }, [](double) { return 1.0; }};
    case PassiveKind::risk_averse: {
      const double s = spec.sigma;
      if (!(s > 0.0)) throw std::domain_error("risk_averse: sigma must be positive");
      const double denom = std::sinh(s);
      return {[s, denom](double t) { return std::sinh(s * t) / denom; },
              [s, denom](double t) { return s * std::cosh(s * t) / denom; }};
    }
    case PassiveKind::eager: {
      const double s = spec.sigma;
      if (!(s > 0.0)) throw std::domain_error("eager: sigma must be positive");
      const double denom = std::exp(-s) - 1.0;
      return {[s, denom](double t) { return (std::exp(-s * t) - 1.0) / denom; },
              [s, denom](double t) { return -s * std::exp(-s * t) / denom; }};
    }
  }
  throw std::invalid_argument("passive: unknown kind");
}

Curve best_response_risk_neutral(double kappa, double lambda) {
  if (kappa < 0.0) throw std::domain_error("kappa must be >= 0");
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  const double c = lambda * kappa / 4.0;
  return {[c](double t) { return (1.0 + c) * t - c * t * t; },
          [c](double t) { return 1.0 + c - 2.0 * c * t; }};
}

double q_sigma(double t, double sigma, double kappa) {
  if (!(sigma > 0.0)) throw std::domain_error("q_sigma: sigma must be positive");
  const double sh = std::sinh(sigma);
  return std::sinh(sigma * t) / sh + (kappa / sigma) * std::cosh(sigma * t) / sh;
}

Curve best_response_risk_averse(double kappa, double lambda, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
  const double q0 = q_sigma(0.0, sigma, kappa);
  const double q1 = q_sigma(1.0, sigma, kappa);
  const double slope = 1.0 + (lambda / 2.0) * (q1 - q0);
  const double sh = std::sinh(sigma);
  auto qd = [sigma, kappa, sh](double t) {
    return (sigma * std::cosh(sigma * t) + kappa * std::sinh(sigma * t)) / sh;
  };
  return {[lambda, q0, slope, sigma, kappa](double t) {
            return (lambda / 2.0) * (q0 - q_sigma(t, sigma, kappa)) + slope * t;
          },
          [lambda, slope, qd](double t) { return -(lambda / 2.0) * qd(t) + slope; }};
}

Curve best_response_eager(double kappa, double lambda, double sigma) {
  if (!(sigma > 0.0)) throw std::domain_error("sigma must be positive");
  const double s = sigma, k = kappa, l = lambda;
  const double denom = 2.0 * (std::exp(s) - 1.0) * s;
  const double c1 = l * std::exp(s) * (s - k);  // constant part of g
  const double c2 = (l + 2.0) * s - k * l;      // weight of -t e^{st}
  auto g = [=](double t) {
    return c1 - t * std::exp(s * t) * c2 +
           std::exp(s + s * t) * (-l * s + k * l * (1.0 - t) + (l + 2.0) * s * t);
  };
  auto gd = [=](double t) {
    return -(1.0 + s * t) * std::exp(s * t) * c2 +
           std::exp(s + s * t) *
               (s * (-l * s + k * l * (1.0 - t) + (l + 2.0) * s * t) - k * l + (l + 2.0) * s);
  };
  Curve out{[=](double t) { return std::exp(-s * t) * g(t) / denom; },
            [=](double t) { return std::exp(-s * t) * (gd(t) - s * g(t)) / denom; }};
  if (std::abs(out.value(0.0)) > 1e-9 || std::abs(out.value(1.0) - 1.0) > 1e-9)
    throw std::runtime_error("best_response_eager: endpoint consistency check failed");
  return out;
}

std::pair<Curve, Curve> equilibrium_pair(double kappa, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
  if (kappa < 0.0) throw std::domain_error("kappa must be >= 0");
  if (kappa == 0.0) {
    Curve line{[](double t) { return t; }, [](double) { return 1.0; }};
    return {line, line};
  }
  const double k = kappa, l = lambda;
  const double c1 = std::exp(k / 3.0) * (std::exp(k / 3.0) + std::exp(2.0 * k / 3.0) + 1.0) *
                    (l + 1.0);
  const double denom = 2.0 * (std::exp(k) - 1.0);
  auto S = [k](double t) {
    return std::exp(k * t / 3.0) + std::exp(2.0 * k * t / 3.0) + std::exp(k * t);
  };
  auto Sd = [k](double t) {
    return (k / 3.0) * (std::exp(k * t / 3.0) + 2.0 * std::exp(2.0 * k * t / 3.0) +
                        3.0 * std::exp(k * t));
  };
  // a_eq uses P = c1 - (l-1) S, b_eq uses P = c1 + (l-1) S scaled by 1/lambda.
  auto make = [=](double sign, double scale) {
    return Curve{
        [=](double t) {
          const double p = c1 + sign * (l - 1.0) * S(t);
          return (1.0 - std::exp(-k * t / 3.0)) * p / (denom * scale);
        },
        [=](double t) {
          const double e = std::exp(-k * t / 3.0);
          const double p = c1 + sign * (l - 1.0) * S(t);
          return ((k / 3.0) * e * p + (1.0 - e) * sign * (l - 1.0) * Sd(t)) / (denom * scale);
        }};
  };
  return {make(-1.0, 1.0), make(+1.0, lambda)};
}

}  // namespace posbuild
