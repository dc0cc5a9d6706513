#include "posbuild/constraints.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace posbuild {

namespace {
constexpr double kPi = std::numbers::pi;

// Row for a(t) <= bound: sum a_n sin(n pi t) <= bound - t.
void position_row(Eigen::MatrixXd& g, Eigen::VectorXd& h, int row, double t, double bound,
                  double sign) {
  const int n_terms = static_cast<int>(g.cols());
  for (int n = 1; n <= n_terms; ++n) g(row, n - 1) = sign * std::sin(n * kPi * t);
  h[row] = sign * (bound - t);
}
}  // namespace

TimeGrid make_grid(int k, double t_start, double t_end) {
  if (k < 1) throw std::domain_error("make_grid: K must be >= 1");
  if (!(t_start >= 0.0 && t_start < t_end && t_end <= 1.0))
    throw std::domain_error("make_grid: need 0 <= t_start < t_end <= 1");
  const double delta = 1.0 / (2.0 * (k + 1));
  const double lo = std::max(t_start, delta);
  const double hi = std::min(t_end, 1.0 - delta);
  if (!(lo < hi) && k > 1) throw std::domain_error("make_grid: degenerate clamped range");
  TimeGrid grid;
  grid.k = k;
  grid.t_start = t_start;
  grid.t_end = t_end;
  grid.points.reserve(k);
  if (k == 1) {
    grid.points.push_back(0.5 * (lo + hi));
  } else {
    for (int i = 0; i < k; ++i) grid.points.push_back(lo + i * (hi - lo) / (k - 1));
  }
  return grid;
}

ConstraintSpec ConstraintSpec::path_upper(std::function<double(double)> c_fn, TimeGrid grid) {
  ConstraintSpec s;
  s.kind = ConstraintKind::upper_path;
  s.upper = std::move(c_fn);
  s.grid = std::move(grid);
  return s;
}

ConstraintSpec ConstraintSpec::path_lower(std::function<double(double)> c_fn, TimeGrid grid) {
  ConstraintSpec s;
  s.kind = ConstraintKind::lower_path;
  s.lower = std::move(c_fn);
  s.grid = std::move(grid);
  return s;
}

ConstraintSpec ConstraintSpec::make_channel(std::function<double(double)> lower,
                                            std::function<double(double)> upper,
                                            TimeGrid grid) {
  ConstraintSpec s;
  s.kind = ConstraintKind::channel;
  s.lower = std::move(lower);
  s.upper = std::move(upper);
  s.grid = std::move(grid);
  return s;
}

ConstraintSpec ConstraintSpec::make_overbuy(double rho, TimeGrid grid) {
  if (!(rho > 0.0)) throw std::domain_error("overbuy: rho must be positive");
  ConstraintSpec s;
  s.kind = ConstraintKind::overbuy;
  s.rho = rho;
  s.grid = std::move(grid);
  return s;
}

ConstraintSpec ConstraintSpec::make_end_strategy(double t_star, double c, int grid_k) {
  if (!(t_star > 0.0 && t_star < 1.0))
    throw std::domain_error("end_strategy: need 0 < t_star < 1");
  if (!(c < 1.0)) throw std::domain_error("end_strategy: need c < 1");
  ConstraintSpec s;
  s.kind = ConstraintKind::end_strategy;
  s.t_star = t_star;
  s.c = c;
  s.grid = make_grid(grid_k, t_star, 1.0);
  return s;
}

ConstraintSpec ConstraintSpec::make_short_sell(double floor, TimeGrid grid) {
  if (floor > 0.0) throw std::domain_error("short_sell: floor must be <= 0");
  ConstraintSpec s;
  s.kind = ConstraintKind::short_sell_floor;
  s.c = floor;
  s.grid = std::move(grid);
  return s;
}

ConstraintSpec ConstraintSpec::make_no_sell(TimeGrid grid) {
  ConstraintSpec s;
  s.kind = ConstraintKind::no_sell;
  s.grid = std::move(grid);
  return s;
}

ConstraintSystem compile(const std::vector<ConstraintSpec>& specs, int n_terms) {
  if (n_terms < 1) throw std::invalid_argument("compile: n_terms must be >= 1");

  int rows = 0;
  for (const auto& spec : specs) {
    const int k = static_cast<int>(spec.grid.points.size());
    rows += (spec.kind == ConstraintKind::channel ||
             spec.kind == ConstraintKind::end_strategy)
                ? 2 * k
                : k;
  }

  ConstraintSystem cs;
  cs.g.resize(rows, n_terms);
  cs.h.resize(rows);
  cs.row_labels.resize(rows);

  // Pre-validate channels (L <= U on the grid) before emitting rows.
  for (const auto& spec : specs) {
    if (spec.kind != ConstraintKind::channel) continue;
    for (double t : spec.grid.points)
      if (spec.lower(t) > spec.upper(t))
        throw std::invalid_argument("compile: channel with L > U at a grid point");
  }

  // Row offsets are fixed up front so specs can be filled independently.
  std::vector<int> offsets(specs.size());
  int off = 0;
  for (size_t i = 0; i < specs.size(); ++i) {
    offsets[i] = off;
    const int k = static_cast<int>(specs[i].grid.points.size());
    off += (specs[i].kind == ConstraintKind::channel ||
            specs[i].kind == ConstraintKind::end_strategy)
               ? 2 * k
               : k;
  }

  const int n_specs = static_cast<int>(specs.size());
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_specs; ++i) {
    const ConstraintSpec& spec = specs[i];
    int row = offsets[i];
    for (double t : spec.grid.points) {
      switch (spec.kind) {
        case ConstraintKind::upper_path:
          position_row(cs.g, cs.h, row, t, spec.upper(t), +1.0);
          cs.row_labels[row++] = {spec.kind, t};
          break;
        case ConstraintKind::lower_path:
          position_row(cs.g, cs.h, row, t, spec.lower(t), -1.0);
          cs.row_labels[row++] = {spec.kind, t};
          break;
        case ConstraintKind::overbuy:
          position_row(cs.g, cs.h, row, t, 1.0 + spec.rho, +1.0);
          cs.row_labels[row++] = {spec.kind, t};
          break;
        case ConstraintKind::short_sell_floor:
          position_row(cs.g, cs.h, row, t, spec.c, -1.0);
          cs.row_labels[row++] = {spec.kind, t};
          break;
        case ConstraintKind::channel:
          position_row(cs.g, cs.h, row, t, spec.lower(t), -1.0);
          cs.row_labels[row++] = {spec.kind, t};
          position_row(cs.g, cs.h, row, t, spec.upper(t), +1.0);
          cs.row_labels[row++] = {spec.kind, t};
          break;
        case ConstraintKind::end_strategy:
          position_row(cs.g, cs.h, row, t, spec.c, -1.0);
          cs.row_labels[row++] = {spec.kind, t};
          position_row(cs.g, cs.h, row, t, 1.0, +1.0);
          cs.row_labels[row++] = {spec.kind, t};
          break;
        case ConstraintKind::no_sell:
          // a'(t) >= 0  <=>  -sum a_n n pi cos(n pi t) <= 1.
          for (int n = 1; n <= n_terms; ++n)
            cs.g(row, n - 1) = -n * kPi * std::cos(n * kPi * t);
          cs.h[row] = 1.0;
          cs.row_labels[row++] = {spec.kind, t};
          break;
      }
    }
  }
  return cs;
}

}  // namespace posbuild
