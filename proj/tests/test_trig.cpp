#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "posbuild/quadrature.hpp"
#include "posbuild/trig_table.hpp"

using namespace posbuild;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("closed-form trig integrals match quadrature for all n, m <= 20") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(std::abs(trig_integral(TrigKind::sin, n) -
                   simpson_serial([n](double t) { return std::sin(n * kPi * t); }, 0, 1,
                                  20001)) < 1e-10);
    CHECK(std::abs(trig_integral(TrigKind::cos, n) -
                   simpson_serial([n](double t) { return std::cos(n * kPi * t); }, 0, 1,
                                  20001)) < 1e-10);
    CHECK(std::abs(trig_integral(TrigKind::t_cos, n) -
                   simpson_serial([n](double t) { return t * std::cos(n * kPi * t); }, 0,
                                  1, 20001)) < 1e-10);
    for (int m = 1; m <= 20; ++m) {
      CHECK(std::abs(trig_integral(TrigKind::cos_cos, n, m) -
                     simpson_serial(
                         [n, m](double t) {
                           return std::cos(n * kPi * t) * std::cos(m * kPi * t);
                         },
                         0, 1, 20001)) < 1e-10);
      CHECK(std::abs(trig_integral(TrigKind::cos_sin, n, m) -
                     simpson_serial(
                         [n, m](double t) {
                           return std::cos(n * kPi * t) * std::sin(m * kPi * t);
                         },
                         0, 1, 20001)) < 1e-10);
    }
  }
}

TEST_CASE("spot values") {
  CHECK(trig_integral(TrigKind::sin, 1) == doctest::Approx(2.0 / kPi));
  CHECK(trig_integral(TrigKind::sin, 2) == doctest::Approx(0.0));
  CHECK(trig_integral(TrigKind::cos, 3) == doctest::Approx(0.0));
  CHECK(trig_integral(TrigKind::cos_cos, 4, 4) == doctest::Approx(0.5));
  CHECK(trig_integral(TrigKind::cos_cos, 3, 5) == doctest::Approx(0.0));
  // same parity or equal indices: zero
  CHECK(trig_integral(TrigKind::cos_sin, 2, 2) == doctest::Approx(0.0));
  CHECK(trig_integral(TrigKind::cos_sin, 1, 3) == doctest::Approx(0.0));
  // n=1, m=2: 2m/(pi (m^2-n^2)) = 4/(3 pi)
  CHECK(trig_integral(TrigKind::cos_sin, 1, 2) == doctest::Approx(4.0 / (3.0 * kPi)));
}

TEST_CASE("table agrees with the scalar function") {
  const TrigTable table(12);
  for (int n = 1; n <= 12; ++n)
    for (int m = 1; m <= 12; ++m)
      CHECK(table.cos_sin(n, m) == trig_integral(TrigKind::cos_sin, n, m));
}

TEST_CASE("invalid indices throw") {
  CHECK_THROWS_AS(trig_integral(TrigKind::sin, -1), std::domain_error);
  CHECK_THROWS_AS(trig_integral(TrigKind::cos_sin, 1, -2), std::domain_error);
}
