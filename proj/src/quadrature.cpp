#include "posbuild/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace posbuild {

namespace {

void check_args(double a, double b, int n_points) {
  if (n_points < 3 || n_points % 2 == 0)
    throw std::invalid_argument("simpson: n_points must be odd and >= 3");
  if (!(a < b)) throw std::invalid_argument("simpson: need a < b");
}

// Simpson weight for sample i of n (endpoints 1, interior alternating 4/2).
inline double weight(int i, int n) {
  if (i == 0 || i == n - 1) return 1.0;
  return (i % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace

double simpson_serial(const std::function<double(double)>& f, double a, double b,
                      int n_points) {
  check_args(a, b, n_points);
  const double h = (b - a) / (n_points - 1);
  double acc = 0.0;
  for (int i = 0; i < n_points; ++i) {
    const double t = (i == n_points - 1) ? b : a + i * h;
    const double v = f(t);
    if (!std::isfinite(v)) throw std::runtime_error("simpson: non-finite integrand sample");
    acc += weight(i, n_points) * v;
  }
  return acc * h / 3.0;
}

double simpson_parallel(const std::function<double(double)>& f, double a, double b,
                        int n_points) {
  check_args(a, b, n_points);
  const double h = (b - a) / (n_points - 1);
  constexpr int kBlocks = 64;
  std::vector<double> block_sum(kBlocks, 0.0);
  bool bad = false;
#pragma omp parallel for schedule(static)
  for (int blk = 0; blk < kBlocks; ++blk) {
    const int lo = static_cast<int>(static_cast<long long>(blk) * n_points / kBlocks);
    const int hi = static_cast<int>(static_cast<long long>(blk + 1) * n_points / kBlocks);
    double s = 0.0;
    for (int i = lo; i < hi; ++i) {
      const double t = (i == n_points - 1) ? b : a + i * h;
      const double v = f(t);
      if (!std::isfinite(v)) {
#pragma omp atomic write
        bad = true;
        break;
      }
      s += weight(i, n_points) * v;
    }
    block_sum[blk] = s;
  }
  if (bad) throw std::runtime_error("simpson: non-finite integrand sample");
  double acc = 0.0;
  for (double s : block_sum) acc += s;  // fixed order
  return acc * h / 3.0;
}

double simpson(const std::function<double(double)>& f, double a, double b,
               int n_points) {
#ifdef _OPENMP
  return simpson_parallel(f, a, b, n_points);
#else
  return simpson_serial(f, a, b, n_points);
#endif
}

double simpson_checked(const std::function<double(double)>& f, double a, double b,
                       int n_points, double abs_tol) {
  double coarse = simpson(f, a, b, n_points);
  for (int pass = 0; pass < 2; ++pass) {
    const int fine_points = 2 * n_points - 1;
    const double fine = simpson(f, a, b, fine_points);
    // Simpson is O(h^4): Richardson error estimate for the fine result.
    const double err = std::abs(fine - coarse) / 15.0;
    if (err <= abs_tol) return fine;
    coarse = fine;
    n_points = fine_points;
  }
  throw std::runtime_error("simpson_checked: quadrature did not converge to tolerance");
}

}  // namespace posbuild
