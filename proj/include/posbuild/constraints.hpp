#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace posbuild {

/// Strictly increasing sample times in (0,1). Endpoints are excluded because
/// the boundary values a(0)=0, a(1)=1 are structural.
struct TimeGrid {
  std::vector<double> points;
  int k = 0;
  double t_start = 0.0;
  double t_end = 1.0;
};

/// K uniform points on [max(t_start, delta), min(t_end, 1-delta)] with
/// delta = 1/(2(K+1)).
TimeGrid make_grid(int k, double t_start = 0.0, double t_end = 1.0);

enum class ConstraintKind {
  upper_path,        // a(t) <= c(t)
  lower_path,        // a(t) >= c(t)
  channel,           // L(t) <= a(t) <= U(t)
  overbuy,           // a(t) <= 1 + rho
  end_strategy,      // c <= a(t) <= 1 on [t_star, 1]
  short_sell_floor,  // a(t) >= c, c <= 0
  no_sell,           // a'(t) >= 0
};

struct ConstraintSpec {
  ConstraintKind kind;
  std::function<double(double)> upper;  // upper_path / channel
  std::function<double(double)> lower;  // lower_path / channel
  double rho = 0.0;                     // overbuy
  double t_star = 0.0;                  // end_strategy
  double c = 0.0;                       // end_strategy / short_sell_floor
  TimeGrid grid;

  static ConstraintSpec path_upper(std::function<double(double)> c_fn, TimeGrid grid);
  static ConstraintSpec path_lower(std::function<double(double)> c_fn, TimeGrid grid);
  static ConstraintSpec make_channel(std::function<double(double)> lower,
                                     std::function<double(double)> upper, TimeGrid grid);
  static ConstraintSpec make_overbuy(double rho, TimeGrid grid);
  /// Requires 0 < t_star < 1 and c < 1; the grid is built over [t_star, 1].
  static ConstraintSpec make_end_strategy(double t_star, double c, int grid_k);
  static ConstraintSpec make_short_sell(double floor, TimeGrid grid);
  static ConstraintSpec make_no_sell(TimeGrid grid);
};

struct ConstraintRowLabel {
  ConstraintKind kind;
  double time;
};

/// Linear inequality system G x <= h over sine coefficients.
struct ConstraintSystem {
  Eigen::MatrixXd g;
  Eigen::VectorXd h;
  std::vector<ConstraintRowLabel> row_labels;

  int rows() const { return static_cast<int>(g.rows()); }
};

/// Sample every spec on its grid and emit one inequality row per sampled
/// constraint. Empty specs produce an M=0 system. Throws
/// std::invalid_argument for a channel with L > U at any grid point.
ConstraintSystem compile(const std::vector<ConstraintSpec>& specs, int n_terms);

}  // namespace posbuild
