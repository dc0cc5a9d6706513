#pragma once

#include <functional>

namespace posbuild {

/// Composite Simpson rule on [a, b] with n_points samples (n_points odd, >= 3).
/// Serial reference implementation.
double simpson_serial(const std::function<double(double)>& f, double a, double b,
                      int n_points);

/// OpenMP-parallel composite Simpson. Block-wise partial sums are combined in
/// fixed index order so the result does not depend on the thread count.
double simpson_parallel(const std::function<double(double)>& f, double a, double b,
                        int n_points);

/// Default entry point (parallel when built with OpenMP).
double simpson(const std::function<double(double)>& f, double a, double b,
               int n_points);

/// Simpson with one Richardson refinement step: integrates at n_points and
/// 2*n_points-1 and checks the extrapolated error estimate against abs_tol.
/// Throws std::runtime_error if the estimate does not meet abs_tol after one
/// further doubling.
double simpson_checked(const std::function<double(double)>& f, double a, double b,
                       int n_points, double abs_tol);

}  // namespace posbuild
