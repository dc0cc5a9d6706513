#include "posbuild/cost.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "posbuild/quadrature.hpp"

namespace posbuild {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(double kappa, double lambda, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
  if (kappa < 0.0) throw std::domain_error("kappa must be >= 0");
  if (!(lambda > 0.0)) throw std::domain_error("lambda must be positive");
}

// sum over odd n of z_n / n
double odd_harmonic(const Eigen::VectorXd& z) {
  double acc = 0.0;
  for (int n = 1; n <= z.size(); n += 2) acc += z[n - 1] / n;
  return acc;
}

// For each n: sum over m with n+m odd of z_m * n*m/(m^2 - n^2).
Eigen::VectorXd cross_coupling(const Eigen::VectorXd& z) {
  const int n_terms = static_cast<int>(z.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_terms);
  for (int n = 1; n <= n_terms; ++n) {
    double acc = 0.0;
    for (int m = 1; m <= n_terms; ++m) {
      if ((n + m) % 2 == 0) continue;
      acc += z[m - 1] * static_cast<double>(n) * m /
             (static_cast<double>(m) * m - static_cast<double>(n) * n);
    }
    out[n - 1] = acc;
  }
  return out;
}

}  // namespace

QuadraticCost assemble_cost_a(const StrategyCoeffs& opponent, double kappa, int n_terms) {
  const double lambda = opponent.scale;
  check_params(kappa, lambda, n_terms);
  if (opponent.n_terms() != n_terms)
    throw std::invalid_argument("assemble_cost_a: opponent size mismatch");
  const Eigen::VectorXd& b = opponent.coeffs;

  QuadraticCost qc;
  qc.perspective = Perspective::A;
  qc.kappa = kappa;
  qc.lambda = lambda;
  qc.constant = 0.5 * (2.0 + kappa) * (1.0 + lambda) +
                (2.0 * kappa * lambda / kPi) * odd_harmonic(b);
  qc.quad_diag.resize(n_terms);
  qc.linear.resize(n_terms);
  const Eigen::VectorXd cross = cross_coupling(b);
  for (int n = 1; n <= n_terms; ++n) {
    qc.quad_diag[n - 1] = kPi * kPi * n * n;
    double lin = 0.5 * kPi * kPi * lambda * n * n * b[n - 1] +
                 2.0 * kappa * lambda * cross[n - 1];
    if (n % 2 == 1) lin -= 2.0 * kappa * lambda / (kPi * n);
    qc.linear[n - 1] = lin;
  }
  return qc;
}

QuadraticCost assemble_cost_b(const StrategyCoeffs& opponent, double kappa, double lambda,
                              int n_terms) {
  check_params(kappa, lambda, n_terms);
  if (opponent.n_terms() != n_terms)
    throw std::invalid_argument("assemble_cost_b: opponent size mismatch");
  const Eigen::VectorXd& a = opponent.coeffs;

  QuadraticCost qc;
  qc.perspective = Perspective::B;
  qc.kappa = kappa;
  qc.lambda = lambda;
  qc.constant = lambda * (0.5 * (2.0 + kappa) * (1.0 + lambda) +
                          (2.0 * kappa / kPi) * odd_harmonic(a));
  qc.quad_diag.resize(n_terms);
  qc.linear.resize(n_terms);
  const Eigen::VectorXd cross = cross_coupling(a);
  for (int n = 1; n <= n_terms; ++n) {
    qc.quad_diag[n - 1] = lambda * lambda * kPi * kPi * n * n;
    double lin = lambda * (0.5 * kPi * kPi * n * n * a[n - 1] + 2.0 * kappa * cross[n - 1]);
    if (n % 2 == 1) lin -= 2.0 * kappa * lambda / (kPi * n);
    qc.linear[n - 1] = lin;
  }
  return qc;
}

double evaluate(const QuadraticCost& qc, const Eigen::VectorXd& x) {
  if (x.size() != qc.linear.size())
    throw std::invalid_argument("evaluate: dimension mismatch");
  return qc.constant + qc.linear.dot(x) + 0.5 * x.dot(qc.quad_diag.cwiseProduct(x));
}

Eigen::VectorXd gradient(const QuadraticCost& qc, const Eigen::VectorXd& x) {
  if (x.size() != qc.linear.size())
    throw std::invalid_argument("gradient: dimension mismatch");
  return qc.linear + qc.quad_diag.cwiseProduct(x);
}

double quadrature_cost(const Curve& a_fn, const Curve& b_fn, double kappa, double lambda,
                       Perspective perspective) {
  auto integrand = [&, kappa, lambda, perspective](double t) {
    const double da = a_fn.deriv(t);
    const double db = b_fn.deriv(t);
    const double pos = a_fn.value(t) + lambda * b_fn.value(t);
    const double aggregate_rate = da + lambda * db;
    const double own_rate = (perspective == Perspective::A) ? da : lambda * db;
    return (aggregate_rate + kappa * pos) * own_rate;
  };
  return simpson_checked(integrand, 0.0, 1.0, 4001, 1e-8);
}

}  // namespace posbuild
