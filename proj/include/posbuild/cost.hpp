#pragma once

#include <Eigen/Dense>

#include "posbuild/closed_forms.hpp"
#include "posbuild/strategy.hpp"

namespace posbuild {

enum class Perspective { A, B };

/// One trader's trading cost as an explicit convex quadratic in that trader's
/// own sine coefficients x:
///   cost(x) = constant + linear . x + 1/2 x . diag(quad_diag) . x
/// The opponent's coefficients are folded into `constant` and `linear`.
/// quad_diag is strictly positive: pi^2 n^2 for perspective A,
/// lambda^2 pi^2 n^2 for perspective B.
struct QuadraticCost {
  double constant = 0.0;
  Eigen::VectorXd linear;
  Eigen::VectorXd quad_diag;
  Perspective perspective = Perspective::A;
  double kappa = 0.0;
  double lambda = 1.0;

  int n_terms() const { return static_cast<int>(linear.size()); }
};

/// Cost of the unit trader A in competition with a lambda-scaled opponent b
/// (lambda taken from opponent.scale), as a quadratic in A's coefficients.
QuadraticCost assemble_cost_a(const StrategyCoeffs& opponent, double kappa, int n_terms);

/// Cost of the lambda-scaled trader B in competition with the unit trader a,
/// as a quadratic in B's unit coefficients.
QuadraticCost assemble_cost_b(const StrategyCoeffs& opponent, double kappa, double lambda,
                              int n_terms);

double evaluate(const QuadraticCost& qc, const Eigen::VectorXd& x);

Eigen::VectorXd gradient(const QuadraticCost& qc, const Eigen::VectorXd& x);

/// Independent oracle: numerically integrates the exact cost integral
///   int (a' + lambda b') a' + kappa (a + lambda b) a' dt      (perspective A)
/// or the lambda b'-weighted analogue (perspective B). b_fn is the unit
/// opponent curve. Absolute error <= 1e-8.
double quadrature_cost(const Curve& a_fn, const Curve& b_fn, double kappa, double lambda,
                       Perspective perspective);

}  // namespace posbuild
