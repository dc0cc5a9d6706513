#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "posbuild/constraints.hpp"
#include "posbuild/cost.hpp"

namespace posbuild {

enum class QpStatus { optimal, infeasible, max_iterations, numeric_failure };

struct SolverReport {
  QpStatus status = QpStatus::numeric_failure;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double complementarity = 0.0;
  double objective = 0.0;
};

struct QpSettings {
  double kkt_tolerance = 1e-8;
  int max_iterations = 10000;
  std::optional<Eigen::VectorXd> warm_start;
};

/// Minimize constant + linear.x + 1/2 x.diag(quad_diag).x subject to G x <= h.
/// Diagonal positive-definite Q: the problem is rescaled to a least-distance
/// projection and solved with a dual active-set method. M = 0 returns the
/// closed-form stationary point. Deterministic: ties broken by lowest row
/// index.
std::pair<Eigen::VectorXd, SolverReport> solve(const QuadraticCost& qc,
                                               const ConstraintSystem& cs,
                                               const QpSettings& settings = {});

/// (primal, dual, complementarity) = (||max(Gx-h,0)||_inf, ||Qx+q+G^T mu||_inf,
/// ||mu o (Gx-h)||_inf).
struct KktResiduals {
  double primal = 0.0;
  double dual = 0.0;
  double complementarity = 0.0;
};

KktResiduals kkt_residuals(const QuadraticCost& qc, const ConstraintSystem& cs,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& mu);

}  // namespace posbuild
