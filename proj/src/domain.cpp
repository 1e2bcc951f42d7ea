#include "mindisk/domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mindisk {

namespace {

double inner_law(double a, double x) {
  return 0.5 * std::pow(x * x + a * a, 0.75);
}

double outer_law(double a, double x) {
  return 0.5 * std::sqrt(x * x + a * a);
}

}  // namespace

DomainSpec::DomainSpec(double a_in) : a(a_in) {
  if (!(a > 0.0) || !(a <= 0.5)) {
    std::ostringstream os;
    os << "domain parameter a must lie in (0, 1/2], got " << a;
    throw std::invalid_argument(os.str());
  }
  bridge_start_height = inner_law(a, DomainConstants::bridge_start);
  bridge_end_height = outer_law(a, DomainConstants::bridge_end);
  bridge_slope = (bridge_end_height - bridge_start_height) /
                 (DomainConstants::bridge_end - DomainConstants::bridge_start);
}

double half_width(const DomainSpec& spec, double x) {
  const double ax = std::abs(x);
  if (ax <= DomainConstants::bridge_start) {
    return inner_law(spec.a, ax);
  }
  if (ax >= DomainConstants::bridge_end) {
    return outer_law(spec.a, ax);
  }
  return spec.bridge_start_height + spec.bridge_slope * (ax - DomainConstants::bridge_start);
}

bool contains(const DomainSpec& spec, PlanePoint z) {
  if (!std::isfinite(z.x) || !std::isfinite(z.y)) {
    return false;
  }
  return std::abs(z.y) <= half_width(spec, z.x);
}

std::pair<double, double> envelope_crossings(double a) {
  if (!(a > 0.0) || !(a <= 0.5)) {
    throw std::invalid_argument("envelope_crossings: a must lie in (0, 1/2]");
  }
  const double r = std::sqrt(1.0 - a * a);
  return {r, -r};
}

std::vector<PlanePoint> grid_sample(const DomainSpec& spec, double x_max, int nx, int ny) {
  if (!(x_max > 0.0) || !std::isfinite(x_max)) {
    throw InvalidResolution("grid_sample: x_max must be positive and finite");
  }
  if (nx < 2 || ny < 2) {
    throw InvalidResolution("grid_sample: need at least 2 samples per direction");
  }
  std::vector<PlanePoint> points;
  points.reserve(static_cast<size_t>(nx) * static_cast<size_t>(ny));
  for (int i = 0; i < nx; ++i) {
    // 2t-1 maps {0, 1/2, 1} to {-1, 0, +1} exactly, so the extreme columns
    // and rows land on the boundary bitwise and odd counts hit the axes.
    const double x = x_max * (2.0 * (static_cast<double>(i) / (nx - 1)) - 1.0);
    const double w = half_width(spec, x);
    for (int j = 0; j < ny; ++j) {
      const double y = w * (2.0 * (static_cast<double>(j) / (ny - 1)) - 1.0);
      points.push_back({x, y});
    }
  }
  return points;
}

double limit_half_width(double x) {
  const double ax = std::abs(x);
  if (ax <= DomainConstants::bridge_start) {
    return 0.5 * std::pow(ax, 1.5);
  }
  if (ax >= DomainConstants::bridge_end) {
    return 0.5 * ax;
  }
  const double h0 = 0.5 * std::pow(DomainConstants::bridge_start, 1.5);
  const double h1 = 0.5 * DomainConstants::bridge_end;
  const double slope = (h1 - h0) / (DomainConstants::bridge_end - DomainConstants::bridge_start);
  return h0 + slope * (ax - DomainConstants::bridge_start);
}

bool limit_contains(PlanePoint z) {
  if (!std::isfinite(z.x) || !std::isfinite(z.y)) {
    return false;
  }
  if (z.x == 0.0) {
    return false;
  }
  return std::abs(z.y) <= limit_half_width(z.x);
}

bool rectangle_inside(const DomainSpec& spec, PlanePoint corner1, PlanePoint corner2) {
  const double x_lo = std::min(corner1.x, corner2.x);
  const double x_hi = std::max(corner1.x, corner2.x);
  const double y_amp = std::max(std::abs(corner1.y), std::abs(corner2.y));
  if (!std::isfinite(x_lo) || !std::isfinite(x_hi) || !std::isfinite(y_amp)) {
    return false;
  }
  // half_width is even and nondecreasing in |x|, so the rectangle's tightest
  // column is the one closest to x = 0.
  const double x_tight =
      (x_lo <= 0.0 && 0.0 <= x_hi) ? 0.0 : std::min(std::abs(x_lo), std::abs(x_hi));
  return y_amp <= half_width(spec, x_tight);
}

}  // namespace mindisk
