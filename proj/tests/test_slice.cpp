#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mindisk/domain.hpp"
#include "mindisk/slice.hpp"

using namespace mindisk;

namespace {
constexpr double kHalfAngleCos = 0.24846359518012404;  // cos(sector_angle / 2)
}

TEST_CASE("slice sampling layout") {
  const WeierstrassParams p = WeierstrassParams::make(0.5);
  SliceCurve c = slice_curve(p, 1.0, 201);
  REQUIRE(c.samples.size() == 201);
  CHECK(c.x == 1.0);
  CHECK(c.y_max == doctest::Approx(0.5590169943749475).epsilon(1e-15));
  CHECK(c.samples.front().y == -c.y_max);
  CHECK(c.samples.back().y == c.y_max);

  const SliceSample& mid = c.samples[100];
  CHECK(mid.y == 0.0);
  CHECK(mid.point.x() == 0.0);
  CHECK(mid.point.y() == 0.0);
  CHECK(mid.tangent.norm() == doctest::Approx(1.0).epsilon(1e-15));

  for (size_t i = 1; i < c.samples.size(); ++i) {
    CHECK(c.samples[i - 1].y < c.samples[i].y);
  }
  for (const SliceSample& s : c.samples) {
    CHECK(s.tangent.norm() == doctest::Approx(std::cosh(s.v)).epsilon(1e-10));
  }

  CHECK_THROWS_AS(slice_curve(p, 1.0, 200), std::invalid_argument);
  CHECK_THROWS_AS(slice_curve(p, 1.0, 1), std::invalid_argument);
}

TEST_CASE("slice symmetry") {
  const WeierstrassParams p = WeierstrassParams::make(0.25);
  SliceCurve c = slice_curve(p, 0.6, 101);
  for (size_t i = 0; i < c.samples.size(); ++i) {
    const SliceSample& s = c.samples[i];
    const SliceSample& m = c.samples[c.samples.size() - 1 - i];
    CHECK(s.y == -m.y);
    CHECK(std::abs(s.point.x() + m.point.x()) < 1e-9);
    CHECK(std::abs(s.point.y() + m.point.y()) < 1e-9);
  }
}

TEST_CASE("tangent spread stays inside the sector") {
  const WeierstrassParams p = WeierstrassParams::make(0.5);
  SliceCurve c = slice_curve(p, 1.0, 201);
  double spread = angle_spread(c);
  CHECK(spread > 0.0);
  // Twice the integrated angular bound |x|/(2(x^2+a^2)) at x=1, a=1/2.
  CHECK(spread <= 0.8);
  CHECK(spread < DomainConstants::sector_angle);

  // The spread measured from u agrees with the spread measured from the
  // tangent vectors themselves.
  const SliceSample& mid = c.samples[100];
  double worst_geo = 0.0;
  for (const SliceSample& s : c.samples) {
    double dot = s.tangent.dot(mid.tangent) / (s.tangent.norm() * mid.tangent.norm());
    double geo = std::acos(std::min(1.0, std::max(-1.0, dot)));
    worst_geo = std::max(worst_geo, geo);
  }
  CHECK(spread == doctest::Approx(2.0 * worst_geo).epsilon(1e-10));
}

TEST_CASE("graph property over the mid tangent") {
  for (double a : {0.5, 0.125}) {
    const WeierstrassParams p = WeierstrassParams::make(a);
    for (double x : {0.5, 1.0, 2.0}) {
      CHECK(is_graph_over_line(slice_curve(p, x, 101)));
    }
  }
}

TEST_CASE("excursion statistics at the reference slice") {
  const WeierstrassParams p = WeierstrassParams::make(0.5);
  SliceCurve c = slice_curve(p, 1.0, 201);
  ExcursionStats st = excursion(c);
  CHECK(st.lower > 0.0);
  CHECK(st.lower >= kHalfAngleCos / 4.0);
  CHECK(st.inner_product <= inner_product_bound(1.0) + 1e-9);
  CHECK(st.lower <= excursion_bound(1.0) + 1e-9);
  CHECK(st.angle_spread == angle_spread(c));

  // Doubling the sample count moves the endpoint statistics only marginally.
  ExcursionStats fine = excursion(slice_curve(p, 1.0, 401));
  CHECK(std::abs(fine.lower - st.lower) < 1e-6);
  CHECK(std::abs(fine.inner_product - st.inner_product) < 1e-6);
}

TEST_CASE("closed-form slice bounds") {
  CHECK(max_v_bound(1.0) == doctest::Approx(0.8888888888888888).epsilon(1e-15));
  CHECK(max_v_bound(-2.0) == doctest::Approx(0.4444444444444444).epsilon(1e-15));
  CHECK(inner_product_bound(1.0) == doctest::Approx(0.7947929617433396).epsilon(1e-14));
  CHECK(excursion_bound(1.0) == doctest::Approx(3.198830642240177).epsilon(1e-13));
  CHECK_THROWS_AS(max_v_bound(0.0), ZeroSliceHeight);
  CHECK_THROWS_AS(inner_product_bound(0.0), ZeroSliceHeight);
  CHECK_THROWS_AS(excursion_bound(0.0), ZeroSliceHeight);

  // The inner-product bound blows up in both directions on a log grid.
  CHECK(inner_product_bound(0.1) > inner_product_bound(0.2));
  CHECK(inner_product_bound(0.2) > inner_product_bound(0.5));
  CHECK(inner_product_bound(2.0) < inner_product_bound(5.0));
  CHECK(inner_product_bound(5.0) < inner_product_bound(10.0));
}

TEST_CASE("the bound is a-uniform where it applies") {
  // max |v| over the x = 1 slice stays under 8/9 for every family member.
  for (double a : {0.5, 0.25, 0.125, 0.0625, 0.03125}) {
    const WeierstrassParams p = WeierstrassParams::make(a);
    SliceCurve c = slice_curve(p, 1.0, 201);
    double worst = 0.0;
    for (const SliceSample& s : c.samples) worst = std::max(worst, std::abs(s.v));
    CHECK(worst <= max_v_bound(1.0));
    ExcursionStats st = excursion(c);
    CHECK(st.inner_product <= inner_product_bound(1.0) + 1e-9);
  }
}

TEST_CASE("embedded-radius estimate") {
  std::vector<double> a_grid = {0.5, 0.25};
  std::vector<double> x_small = {0.5, 1.0};
  std::vector<double> x_large = {0.5, 1.0, 2.0, 5.0};
  double r_small = estimate_embedded_radius(a_grid, x_small, 101);
  double r_large = estimate_embedded_radius(a_grid, x_large, 101);
  CHECK(r_small > 0.0);
  // A minimum over a superset cannot increase.
  CHECK(r_large <= r_small);
  CHECK(r_large > 0.0);
}

TEST_CASE("axis turning matches the arctangent difference") {
  const WeierstrassParams p = WeierstrassParams::make(0.5);
  double turn = axis_turning(p, 0.01, 1.0);
  double oracle = (std::atan(1.0 / 0.5) - std::atan(0.01 / 0.5)) / 0.5;
  CHECK(turn == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(axis_turning(p, 0.7, 0.7) == 0.0);
  // Quarter-family member turns four times over the whole positive axis.
  const WeierstrassParams q = WeierstrassParams::make(0.0625);
  double nearly_all = axis_turning(q, 1e-6, 1e6) / (2 * std::numbers::pi);
  CHECK(nearly_all == doctest::Approx(4.0).epsilon(1e-4));
}
