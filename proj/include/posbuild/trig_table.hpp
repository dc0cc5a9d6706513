#pragma once

#include <vector>

namespace posbuild {

/// Closed-form trigonometric integrals over [0,1] used when assembling the
/// quadratic cost forms. Index m is only meaningful for the two-index kinds.
enum class TrigKind {
  sin,      // int sin(n pi t) dt
  cos,      // int cos(n pi t) dt
  t_cos,    // int t cos(n pi t) dt
  cos_cos,  // int cos(n pi t) cos(m pi t) dt
  cos_sin,  // int cos(n pi t) sin(m pi t) dt
};

double trig_integral(TrigKind kind, int n, int m = 0);

/// Precomputed cos_sin values up to a maximum index, indexed as (n, m).
class TrigTable {
 public:
  explicit TrigTable(int max_index);
  double cos_sin(int n, int m) const;
  int max_index() const { return max_index_; }

 private:
  int max_index_;
  // Row-major (n-1)*max_index_ + (m-1).
  std::vector<double> cos_sin_;
};

}  // namespace posbuild
