#include "posbuild/qp.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace posbuild {

namespace {

// Lawson-Hanson NNLS: minimize ||E u - f|| subject to u >= 0.
// Deterministic: ties in the gradient pick the lowest index. Returns false if
// the iteration budget is exhausted. `iterations` counts inner solves.
bool nnls(const Eigen::MatrixXd& e, const Eigen::VectorXd& f, Eigen::VectorXd& u,
          std::vector<char>& in_p, int max_iterations, int& iterations) {
  const int m = static_cast<int>(e.cols());
  u = Eigen::VectorXd::Zero(m);
  constexpr double kGradTol = 1e-12;

  std::vector<int> pidx;
  auto passive_solve = [&]() {
    pidx.clear();
    for (int j = 0; j < m; ++j)
      if (in_p[j]) pidx.push_back(j);
    Eigen::MatrixXd ep(e.rows(), pidx.size());
    for (size_t i = 0; i < pidx.size(); ++i) ep.col(static_cast<int>(i)) = e.col(pidx[i]);
    return Eigen::VectorXd(ep.colPivHouseholderQr().solve(f));
  };

  // Inner loop: make the passive-set least-squares solution nonnegative,
  // dropping variables that the feasibility step drives to zero.
  auto inner = [&]() {
    while (true) {
      if (pidx.empty()) return true;
      if (++iterations > max_iterations) return false;
      const Eigen::VectorXd z = passive_solve();
      bool all_positive = true;
      for (int i = 0; i < z.size(); ++i)
        if (z[i] <= 0.0) all_positive = false;
      if (all_positive) {
        u.setZero();
        for (size_t i = 0; i < pidx.size(); ++i) u[pidx[i]] = z[static_cast<int>(i)];
        return true;
      }
      double alpha = 1.0;
      for (size_t i = 0; i < pidx.size(); ++i) {
        if (z[static_cast<int>(i)] > 0.0) continue;
        const double ui = u[pidx[i]];
        const double d = ui - z[static_cast<int>(i)];
        alpha = std::min(alpha, (d > 0.0) ? ui / d : 0.0);
      }
      for (size_t i = 0; i < pidx.size(); ++i) {
        const int j = pidx[i];
        u[j] += alpha * (z[static_cast<int>(i)] - u[j]);
        if (u[j] <= kGradTol) {
          u[j] = 0.0;
          in_p[j] = 0;
        }
      }
      pidx.clear();
      for (int j = 0; j < m; ++j)
        if (in_p[j]) pidx.push_back(j);
    }
  };

  // Warm-started passive sets must be made consistent before the main loop.
  bool have_seed = false;
  for (int j = 0; j < m; ++j)
    if (in_p[j]) have_seed = true;
  if (have_seed) {
    pidx.clear();
    for (int j = 0; j < m; ++j)
      if (in_p[j]) pidx.push_back(j);
    if (!inner()) return false;
  }

  while (true) {
    const Eigen::VectorXd w = e.transpose() * (f - e * u);
    int t = -1;
    double best = kGradTol;
    for (int j = 0; j < m; ++j) {
      if (in_p[j]) continue;
      if (w[j] > best) {
        best = w[j];
        t = j;
      }
    }
    if (t < 0) return true;  // KKT satisfied
    in_p[t] = 1;
    pidx.push_back(t);
    if (!inner()) return false;
  }
}

}  // namespace

KktResiduals kkt_residuals(const QuadraticCost& qc, const ConstraintSystem& cs,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& mu) {
  if (x.size() != qc.linear.size() || mu.size() != cs.h.size())
    throw std::invalid_argument("kkt_residuals: dimension mismatch");
  KktResiduals r;
  Eigen::VectorXd stationarity = gradient(qc, x);
  if (cs.rows() > 0) {
    const Eigen::VectorXd slack = cs.g * x - cs.h;
    r.primal = slack.cwiseMax(0.0).lpNorm<Eigen::Infinity>();
    r.complementarity = mu.cwiseProduct(slack).lpNorm<Eigen::Infinity>();
    stationarity += cs.g.transpose() * mu;
  }
  r.dual = stationarity.lpNorm<Eigen::Infinity>();
  return r;
}

std::pair<Eigen::VectorXd, SolverReport> solve(const QuadraticCost& qc,
                                               const ConstraintSystem& cs,
                                               const QpSettings& settings) {
  const int n = qc.n_terms();
  if ((qc.quad_diag.array() <= 0.0).any())
    throw std::invalid_argument("solve: quad_diag must be strictly positive");
  if (cs.rows() > 0 && cs.g.cols() != n)
    throw std::invalid_argument("solve: constraint system dimension mismatch");
  if (!(settings.kkt_tolerance > 0.0))
    throw std::invalid_argument("solve: tolerance must be positive");

  const int m = cs.rows();
  const double tol = settings.kkt_tolerance;

  auto finish = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& mu_full,
                    QpStatus status, int iterations) {
    SolverReport rep;
    const KktResiduals res = kkt_residuals(qc, cs, x, mu_full);
    rep.primal_residual = res.primal;
    rep.dual_residual = res.dual;
    rep.complementarity = res.complementarity;
    rep.objective = evaluate(qc, x);
    rep.iterations = iterations;
    if (status == QpStatus::optimal &&
        (res.primal > tol || res.dual > tol || res.complementarity > tol))
      status = QpStatus::numeric_failure;
    rep.status = status;
    return std::make_pair(x, rep);
  };

  // Unconstrained: closed form.
  const Eigen::VectorXd x_free = -qc.linear.cwiseQuotient(qc.quad_diag);
  if (m == 0) return finish(x_free, Eigen::VectorXd::Zero(0), QpStatus::optimal, 0);

  // Rescale y = S x with S = sqrt(Q): least-distance projection of
  // y0 = -q/sqrt(Q) onto { A y <= b } with A = G S^{-1}. In z = y - y0 this is
  // the classic LDP  min ||z||  s.t.  (-A) z >= A y0 - b,  solved through NNLS
  // on the stacked matrix [(-A)^T; rhs^T].
  const Eigen::VectorXd s = qc.quad_diag.cwiseSqrt();
  const Eigen::VectorXd y0 = -qc.linear.cwiseQuotient(s);
  const Eigen::MatrixXd a_mat = cs.g * s.cwiseInverse().asDiagonal();
  const Eigen::VectorXd rhs = a_mat * y0 - cs.h;

  if (rhs.maxCoeff() <= 0.0) {
    // Unconstrained optimum already feasible.
    return finish(x_free, Eigen::VectorXd::Zero(m), QpStatus::optimal, 0);
  }

  Eigen::MatrixXd e(n + 1, m);
  e.topRows(n) = -a_mat.transpose();
  e.row(n) = rhs.transpose();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n + 1);
  f[n] = 1.0;

  // Warm start: seed the NNLS passive set with rows active at the given point.
  std::vector<char> in_p(m, 0);
  if (settings.warm_start && settings.warm_start->size() == n) {
    const Eigen::VectorXd yw = settings.warm_start->cwiseProduct(s);
    for (int j = 0; j < m; ++j)
      if (std::abs(a_mat.row(j).dot(yw) - cs.h[j]) <= 1e-8) in_p[j] = 1;
  }

  Eigen::VectorXd u;
  int iterations = 0;
  if (!nnls(e, f, u, in_p, settings.max_iterations, iterations))
    return finish(x_free, Eigen::VectorXd::Zero(m), QpStatus::max_iterations, iterations);

  const Eigen::VectorXd r = e * u - f;
  const double denom = r[n];
  if (r.squaredNorm() <= 1e-20 || denom >= -1e-14)
    return finish(x_free, Eigen::VectorXd::Zero(m), QpStatus::infeasible, iterations);

  const Eigen::VectorXd z = r.head(n) / (-denom);
  const Eigen::VectorXd y = y0 + z;
  const Eigen::VectorXd mu = u / (-denom);
  return finish(y.cwiseQuotient(s), mu, QpStatus::optimal, iterations);
}

}  // namespace posbuild
