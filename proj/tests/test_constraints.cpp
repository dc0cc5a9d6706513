#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "posbuild/constraints.hpp"

using namespace posbuild;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("make_grid clamps away from the endpoints") {
  const TimeGrid g = make_grid(200);
  CHECK(g.points.size() == 200);
  const double delta = 1.0 / (2.0 * 201.0);
  CHECK(g.points.front() == doctest::Approx(delta));
  CHECK(g.points.back() == doctest::Approx(1.0 - delta));
  for (size_t i = 1; i < g.points.size(); ++i) CHECK(g.points[i] > g.points[i - 1]);

  const TimeGrid mid = make_grid(1);
  CHECK(mid.points.size() == 1);
  CHECK(mid.points[0] == doctest::Approx(0.5));

  const TimeGrid part = make_grid(50, 0.6, 1.0);
  CHECK(part.points.front() == doctest::Approx(0.6));
  CHECK(part.points.back() < 1.0);

  CHECK_THROWS_AS(make_grid(0), std::domain_error);
  CHECK_THROWS_AS(make_grid(10, 0.8, 0.2), std::domain_error);
}

TEST_CASE("row counts per kind") {
  const TimeGrid g = make_grid(10);
  CHECK(compile({ConstraintSpec::make_overbuy(0.1, g)}, 4).rows() == 10);
  CHECK(compile({ConstraintSpec::make_no_sell(g)}, 4).rows() == 10);
  CHECK(compile({ConstraintSpec::make_channel([](double t) { return t - 0.1; },
                                              [](double t) { return t + 0.1; }, g)},
                4)
            .rows() == 20);
  CHECK(compile({ConstraintSpec::make_end_strategy(0.5, 0.9, 10)}, 4).rows() == 20);
  CHECK(compile({}, 4).rows() == 0);
  // two specs concatenate
  CHECK(compile({ConstraintSpec::make_overbuy(0.1, g), ConstraintSpec::make_no_sell(g)}, 4)
            .rows() == 20);
}

TEST_CASE("upper path row content") {
  const TimeGrid g = make_grid(1);  // single point t = 0.5
  const ConstraintSystem cs =
      compile({ConstraintSpec::path_upper([](double t) { return t + 0.2; }, g)}, 3);
  REQUIRE(cs.rows() == 1);
  const double t = 0.5;
  for (int n = 1; n <= 3; ++n)
    CHECK(cs.g(0, n - 1) == doctest::Approx(std::sin(n * kPi * t)));
  CHECK(cs.h[0] == doctest::Approx(0.2));  // c(t) - t
  CHECK(cs.row_labels[0].kind == ConstraintKind::upper_path);
  CHECK(cs.row_labels[0].time == doctest::Approx(t));
}

TEST_CASE("lower path flips the sign") {
  const TimeGrid g = make_grid(1);
  const ConstraintSystem cs =
      compile({ConstraintSpec::path_lower([](double t) { return t - 0.3; }, g)}, 2);
  REQUIRE(cs.rows() == 1);
  CHECK(cs.g(0, 0) == doctest::Approx(-std::sin(kPi * 0.5)));
  CHECK(cs.h[0] == doctest::Approx(0.3));
}

TEST_CASE("no_sell row bounds the negative trading rate") {
  const TimeGrid g = make_grid(1);
  const ConstraintSystem cs = compile({ConstraintSpec::make_no_sell(g)}, 2);
  REQUIRE(cs.rows() == 1);
  CHECK(cs.g(0, 0) == doctest::Approx(-kPi * std::cos(kPi * 0.5)));
  CHECK(cs.g(0, 1) == doctest::Approx(-2.0 * kPi * std::cos(2.0 * kPi * 0.5)));
  CHECK(cs.h[0] == doctest::Approx(1.0));
}

TEST_CASE("straight line is feasible for the default kinds") {
  const TimeGrid g = make_grid(50);
  const ConstraintSystem cs = compile(
      {ConstraintSpec::make_overbuy(0.1, g), ConstraintSpec::make_no_sell(g),
       ConstraintSpec::make_short_sell(-0.05, g),
       ConstraintSpec::make_channel([](double t) { return t - 0.1; },
                                    [](double t) { return t + 0.1; }, g),
       ConstraintSpec::make_end_strategy(0.5, 0.4, 20)},
      6);
  const Eigen::VectorXd x = Eigen::VectorXd::Zero(6);
  CHECK((cs.g * x - cs.h).maxCoeff() <= 0.0);
}

TEST_CASE("validation") {
  const TimeGrid g = make_grid(5);
  CHECK_THROWS_AS(ConstraintSpec::make_overbuy(0.0, g), std::domain_error);
  CHECK_THROWS_AS(ConstraintSpec::make_end_strategy(0.0, 0.5, 5), std::domain_error);
  CHECK_THROWS_AS(ConstraintSpec::make_end_strategy(0.5, 1.2, 5), std::domain_error);
  CHECK_THROWS_AS(ConstraintSpec::make_short_sell(0.1, g), std::domain_error);
  CHECK_THROWS_AS(
      compile({ConstraintSpec::make_channel([](double t) { return t + 0.1; },
                                            [](double t) { return t - 0.1; }, g)},
              4),
      std::invalid_argument);
  CHECK_THROWS_AS(compile({ConstraintSpec::make_no_sell(g)}, 0), std::invalid_argument);
}
