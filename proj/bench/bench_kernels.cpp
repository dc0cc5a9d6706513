// Kernel benchmarks: OpenMP-parallel entry points against their serial
// reference implementations.

#include <benchmark/benchmark.h>

#include <cmath>

#include "posbuild/closed_forms.hpp"
#include "posbuild/constraints.hpp"
#include "posbuild/cost.hpp"
#include "posbuild/quadrature.hpp"
#include "posbuild/strategy.hpp"

using namespace posbuild;

namespace {

double heavy_integrand(double t) {
  return std::exp(-t) * std::sin(40.0 * t) * std::cosh(0.5 * t);
}

void bm_simpson_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(simpson_serial(heavy_integrand, 0.0, 1.0, n));
}

void bm_simpson_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(simpson_parallel(heavy_integrand, 0.0, 1.0, n));
}

void bm_constraint_compile(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const TimeGrid grid = make_grid(k);
  std::vector<ConstraintSpec> specs = {
      ConstraintSpec::make_overbuy(0.05, grid),
      ConstraintSpec::make_no_sell(grid),
      ConstraintSpec::make_channel([](double t) { return t - 0.1; },
                                   [](double t) { return t + 0.1; }, grid),
      ConstraintSpec::make_end_strategy(0.5, 0.9, k),
  };
  for (auto _ : state) benchmark::DoNotOptimize(compile(specs, 40));
}

void bm_fit_from_function(benchmark::State& state) {
  const Curve ra = passive({PassiveKind::risk_averse, 3.0});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fit_from_function(ra.value, n));
}

void bm_quadrature_cost(benchmark::State& state) {
  const Curve a = best_response_risk_neutral(1.0, 5.0);
  const Curve b = passive({PassiveKind::risk_neutral, 0.0});
  for (auto _ : state)
    benchmark::DoNotOptimize(quadrature_cost(a, b, 1.0, 5.0, Perspective::A));
}

}  // namespace

BENCHMARK(bm_simpson_serial)->Arg(4001)->Arg(40001)->Arg(400001);
BENCHMARK(bm_simpson_parallel)->Arg(4001)->Arg(40001)->Arg(400001);
BENCHMARK(bm_constraint_compile)->Arg(200)->Arg(2000);
BENCHMARK(bm_fit_from_function)->Arg(20)->Arg(40);
BENCHMARK(bm_quadrature_cost);

BENCHMARK_MAIN();
