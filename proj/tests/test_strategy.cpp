#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "posbuild/closed_forms.hpp"
#include "posbuild/strategy.hpp"

using namespace posbuild;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("zero coefficients reconstruct the straight line") {
  const StrategyCoeffs s = StrategyCoeffs::zero(8);
  for (double t : {0.0, 0.25, 0.7, 1.0}) CHECK(reconstruct(s, t) == doctest::Approx(t));
  CHECK(derivative_at(s, 0.3) == doctest::Approx(1.0));
}

TEST_CASE("boundary values are structural") {
  Eigen::VectorXd c(3);
  c << 0.4, -0.2, 0.05;
  const StrategyCoeffs s(c);
  CHECK(reconstruct(s, 0.0) == 0.0);
  CHECK(reconstruct(s, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("evaluation outside the unit interval throws") {
  const StrategyCoeffs s = StrategyCoeffs::zero(2);
  CHECK_THROWS_AS(reconstruct(s, -0.01), std::domain_error);
  CHECK_THROWS_AS(derivative_at(s, 1.01), std::domain_error);
}

TEST_CASE("fit round trip recovers coefficients") {
  Eigen::VectorXd c(5);
  c << 0.3, -0.1, 0.04, 0.02, -0.01;
  const StrategyCoeffs s(c);
  const StrategyCoeffs back =
      fit_from_function([&](double t) { return reconstruct(s, t); }, 5);
  CHECK((back.coeffs - c).lpNorm<Eigen::Infinity>() < 1e-9);
}

TEST_CASE("fit rejects curves violating the boundary conditions") {
  CHECK_THROWS_AS(fit_from_function([](double t) { return t + 0.1; }, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_from_function([](double t) { return 0.5 * t; }, 4),
                  std::invalid_argument);
}

TEST_CASE("fit of a risk-averse curve reconstructs it") {
  const Curve ra = passive({PassiveKind::risk_averse, 2.0});
  const StrategyCoeffs s = fit_from_function(ra.value, 30);
  CHECK(l2_distance([&](double t) { return reconstruct(s, t); }, ra.value) < 1e-4);
}

TEST_CASE("derivative matches central differences") {
  Eigen::VectorXd c(4);
  c << 0.2, 0.1, -0.05, 0.03;
  const StrategyCoeffs s(c);
  const double h = 1e-6;
  for (double t : {0.2, 0.5, 0.8}) {
    const double fd = (reconstruct(s, t + h) - reconstruct(s, t - h)) / (2.0 * h);
    CHECK(derivative_at(s, t) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("convex_combine interpolates coefficientwise") {
  Eigen::VectorXd c1(3), c2(3);
  c1 << 0.3, 0.0, -0.1;
  c2 << -0.1, 0.2, 0.1;
  const StrategyCoeffs s1(c1), s2(c2);
  const StrategyCoeffs mix = convex_combine(s1, s2, 0.25);
  for (double t : {0.1, 0.6}) {
    CHECK(reconstruct(mix, t) ==
          doctest::Approx(0.25 * reconstruct(s1, t) + 0.75 * reconstruct(s2, t)));
  }
  CHECK_THROWS_AS(convex_combine(s1, s2, 1.5), std::domain_error);
  CHECK_THROWS_AS(convex_combine(s1, StrategyCoeffs::zero(5), 0.5), std::invalid_argument);
  CHECK_THROWS_AS(convex_combine(s1, StrategyCoeffs(c2, 2.0), 0.5), std::invalid_argument);
}

TEST_CASE("coefficient-space L2 distance agrees with quadrature") {
  Eigen::VectorXd c1(4), c2(4);
  c1 << 0.25, -0.05, 0.02, 0.0;
  c2 << 0.1, 0.1, 0.0, -0.03;
  const StrategyCoeffs s1(c1), s2(c2);
  const double direct = l2_distance(s1, s2);
  const double quad = l2_distance([&](double t) { return reconstruct(s1, t); },
                                  [&](double t) { return reconstruct(s2, t); });
  CHECK(direct == doctest::Approx(quad).epsilon(1e-9));
  // orthogonality: single harmonic of amplitude eps has L2 eps/sqrt(2)
  Eigen::VectorXd e = Eigen::VectorXd::Zero(4);
  e[1] = 0.2;
  CHECK(l2_distance(StrategyCoeffs(e), StrategyCoeffs::zero(4)) ==
        doctest::Approx(0.2 / std::sqrt(2.0)));
}
