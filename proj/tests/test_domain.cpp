#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "mindisk/domain.hpp"

using namespace mindisk;

TEST_CASE("breakpoint constants") {
  constexpr double pi = std::numbers::pi;
  CHECK(DomainConstants::bridge_start == doctest::Approx(0.3788732574558605).epsilon(1e-15));
  CHECK(DomainConstants::bridge_end == doctest::Approx(0.4394366287279302).epsilon(1e-15));
  CHECK(DomainConstants::sector_angle == doctest::Approx(2.639405078930656).epsilon(1e-15));
  // The breakpoints split [1/pi, 1/2] in thirds; the sector angle is the
  // reciprocal of the first breakpoint and stays below pi.
  CHECK(1.0 / pi < DomainConstants::bridge_start);
  CHECK(DomainConstants::bridge_start < DomainConstants::bridge_end);
  CHECK(DomainConstants::bridge_end < 0.5);
  CHECK(DomainConstants::sector_angle ==
        doctest::Approx(1.0 / DomainConstants::bridge_start).epsilon(1e-15));
  CHECK(DomainConstants::sector_angle < pi);
}

TEST_CASE("half width values") {
  DomainSpec spec(0.5);
  CHECK(half_width(spec, 0.0) == doctest::Approx(0.1767766952966369).epsilon(1e-15));
  CHECK(half_width(spec, 1.0) == doctest::Approx(0.5590169943749475).epsilon(1e-15));
  CHECK(half_width(spec, DomainConstants::bridge_start) ==
        doctest::Approx(0.2484367036751025).epsilon(1e-14));
  CHECK(spec.bridge_start_height < spec.bridge_end_height);
}

TEST_CASE("half width is even, continuous and monotone in |x|") {
  for (double a : {0.5, 0.25, 0.0625, 0.01}) {
    DomainSpec spec(a);
    CHECK(spec.bridge_start_height < spec.bridge_end_height);
    double prev = half_width(spec, 0.0);
    for (double x = 0.01; x <= 3.0; x += 0.01) {
      double w = half_width(spec, x);
      CHECK(w == half_width(spec, -x));
      CHECK(w >= prev);
      // Never above the outer envelope.
      CHECK(w <= std::sqrt(x * x + a * a) / 2 * (1 + 1e-14));
      prev = w;
    }
    // Approach each breakpoint from both sides.
    for (double bp : {DomainConstants::bridge_start, DomainConstants::bridge_end}) {
      double at = half_width(spec, bp);
      CHECK(half_width(spec, bp - 1e-9) == doctest::Approx(at).epsilon(1e-7));
      CHECK(half_width(spec, bp + 1e-9) == doctest::Approx(at).epsilon(1e-7));
    }
  }
}

TEST_CASE("strips are nested in the family parameter") {
  DomainSpec small(0.125);
  DomainSpec big(0.5);
  for (double x = -2.0; x <= 2.0; x += 0.05) {
    CHECK(half_width(small, x) <= half_width(big, x));
  }
}

TEST_CASE("the two envelope laws swap order at the crossing") {
  // Below x^2 = 1 - a^2 the 3/4-power envelope sits under the 1/2-power one,
  // above it the order flips.
  for (double a : {0.5, 0.25}) {
    auto [cross_pos, cross_neg] = envelope_crossings(a);
    CHECK(cross_neg == -cross_pos);
    for (double x : {0.1, 0.5, cross_pos - 0.05}) {
      double t = x * x + a * a;
      CHECK(std::pow(t, 0.75) < std::sqrt(t));
    }
    for (double x : {cross_pos + 0.05, 2.0, 5.0}) {
      double t = x * x + a * a;
      CHECK(std::pow(t, 0.75) > std::sqrt(t));
    }
  }
}

TEST_CASE("envelope crossing points") {
  auto [p_half, n_half] = envelope_crossings(0.5);
  CHECK(p_half == doctest::Approx(0.8660254037844386).epsilon(1e-15));
  CHECK(n_half == doctest::Approx(-0.8660254037844386).epsilon(1e-15));
  auto [p3, n3] = envelope_crossings(0.3);
  CHECK(p3 == doctest::Approx(0.9539392014169457).epsilon(1e-15));
  // Always inside [sqrt(3)/2, 1] for the allowed parameter range.
  for (double a : {0.5, 0.3, 0.1, 0.01}) {
    double c = envelope_crossings(a).first;
    CHECK(c >= 0.8660254037844386);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("membership") {
  DomainSpec spec(0.5);
  CHECK(contains(spec, {0.0, 0.0}));
  CHECK_FALSE(contains(spec, {0.0, 0.2}));
  CHECK(contains(spec, {1.0, 0.5}));
  // Boundary is included.
  CHECK(contains(spec, {0.0, half_width(spec, 0.0)}));
  CHECK_FALSE(contains(spec, {0.0, std::nextafter(half_width(spec, 0.0), 1.0)}));
  CHECK_FALSE(contains(spec, {std::numeric_limits<double>::quiet_NaN(), 0.0}));
  CHECK_FALSE(contains(spec, {0.0, std::numeric_limits<double>::infinity()}));
}

TEST_CASE("grid sampling") {
  DomainSpec spec(0.5);
  auto pts = grid_sample(spec, 1.0, 3, 3);
  REQUIRE(pts.size() == 9);
  for (const PlanePoint& z : pts) {
    CHECK(contains(spec, z));
    CHECK(z.y * z.y <= (z.x * z.x + 0.25) / 4 * (1 + 1e-14));
  }
  // Row-major: x varies slowest, endpoints exact.
  CHECK(pts[0].x == -1.0);
  CHECK(pts[8].x == 1.0);
  CHECK(pts[3].x == 0.0);
  CHECK(pts[4].x == 0.0);
  CHECK(pts[4].y == 0.0);  // odd ny puts a sample on the axis
  CHECK(pts[3].y == -half_width(spec, 0.0));
  CHECK(pts[5].y == half_width(spec, 0.0));

  auto again = grid_sample(spec, 1.0, 3, 3);
  REQUIRE(again.size() == pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    CHECK(again[i].x == pts[i].x);
    CHECK(again[i].y == pts[i].y);
  }

  CHECK_THROWS_AS(grid_sample(spec, 1.0, 1, 3), InvalidResolution);
  CHECK_THROWS_AS(grid_sample(spec, 1.0, 3, 0), InvalidResolution);
  CHECK_THROWS_AS(grid_sample(spec, -1.0, 3, 3), InvalidResolution);
}

TEST_CASE("limit strip") {
  CHECK_FALSE(limit_contains({0.0, 0.0}));
  CHECK_FALSE(limit_contains({0.0, 0.01}));
  CHECK(limit_contains({0.5, 0.0}));
  CHECK(limit_contains({0.2, 0.04}));
  CHECK_FALSE(limit_contains({0.2, 0.05}));
  CHECK(limit_half_width(0.2) == doctest::Approx(0.044721359549995794).epsilon(1e-14));
  // The a -> 0 limit is approached monotonically from above.
  for (double x : {0.05, 0.2, 0.7, 1.5}) {
    double lim = limit_half_width(x);
    double prev = half_width(DomainSpec(0.5), x);
    for (double a : {0.25, 0.0625, 0.015625, 0.001}) {
      double w = half_width(DomainSpec(a), x);
      CHECK(w <= prev);
      CHECK(w >= lim);
      prev = w;
    }
    CHECK(prev == doctest::Approx(lim).epsilon(1e-3));
  }
}

TEST_CASE("rectangle membership") {
  DomainSpec spec(0.5);
  CHECK(rectangle_inside(spec, {-0.4, 0.0}, {1.2, 0.0}));
  CHECK(rectangle_inside(spec, {0.0, 0.0}, {0.1, 0.17}));
  CHECK_FALSE(rectangle_inside(spec, {0.0, 0.0}, {0.1, 0.2}));
  // Width is smallest at the x closest to zero inside the span, so a span
  // straddling zero is judged at x = 0.
  CHECK(rectangle_inside(spec, {-1.0, -0.17}, {1.0, 0.17}));
  CHECK_FALSE(rectangle_inside(spec, {-1.0, -0.18}, {1.0, 0.18}));
  // Away from zero the same height fits.
  CHECK(rectangle_inside(spec, {0.8, -0.18}, {1.0, 0.18}));
  // Corner order does not matter.
  CHECK(rectangle_inside(spec, {0.1, 0.17}, {0.0, 0.0}));
}
