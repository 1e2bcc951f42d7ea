#pragma once

#include <numbers>
#include <utility>
#include <vector>

#include "mindisk/types.hpp"

// The immersion domain of each family member is a strip around the real axis,
//
//   Omega_a = { (x, y) : |y| <= half_width(a, x) },
//
// whose half-width follows (x^2 + a^2)^(3/4) / 2 near the axis origin,
// (x^2 + a^2)^(1/2) / 2 far out, and a straight bridge between the two laws,
// so the boundary is continuous and the width never decreases in |x|.

namespace mindisk {

/// Breakpoints of the piecewise boundary law, shared by the whole family.
/// bridge_start sits a third of the way from 1/pi to 1/2; sector_angle is its
/// reciprocal, the opening angle that slice tangents stay inside beyond the
/// bridge. sector_angle < pi, so the half-angle cosine below is positive.
struct DomainConstants {
  static constexpr double bridge_start = (4.0 + std::numbers::pi) / (6.0 * std::numbers::pi);
  static constexpr double bridge_end = (1.0 + std::numbers::pi) / (3.0 * std::numbers::pi);
  static constexpr double sector_angle = 6.0 * std::numbers::pi / (4.0 + std::numbers::pi);
};

/// Boundary data for one family member: the bridge endpoints' heights and the
/// interpolating slope are fixed by a, so they are precomputed here.
struct DomainSpec {
  double a = 0.5;
  double bridge_start_height = 0.0;
  double bridge_end_height = 0.0;
  double bridge_slope = 0.0;

  explicit DomainSpec(double a);
};

/// Boundary height above x; even in x, nondecreasing in |x|, continuous at
/// both breakpoints (the breakpoint values agree bitwise across pieces).
double half_width(const DomainSpec& spec, double x);

bool contains(const DomainSpec& spec, PlanePoint z);

/// Where the two power-law envelopes (x^2+a^2)^(3/4) and (x^2+a^2)^(1/2)
/// meet: x = +-sqrt(1 - a^2). Returned as (positive, negative).
std::pair<double, double> envelope_crossings(double a);

/// Row-major grid over [-x_max, x_max]: nx columns, each column's ny samples
/// spanning [-w, w] inclusive for w = half_width at that column. Endpoints
/// are hit exactly; odd counts place a sample exactly on the relevant axis.
std::vector<PlanePoint> grid_sample(const DomainSpec& spec, double x_max, int nx, int ny);

/// Pointwise limit of half_width as a -> 0: |x|^(3/2)/2, |x|/2, and the
/// corresponding bridge.
double limit_half_width(double x);

/// Membership in the limit domain, which excludes the whole line x = 0.
bool limit_contains(PlanePoint z);

/// Whether the closed axis-aligned rectangle with the given opposite corners
/// sits inside Omega_a.
bool rectangle_inside(const DomainSpec& spec, PlanePoint corner1, PlanePoint corner2);

}  // namespace mindisk
