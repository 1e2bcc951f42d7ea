#include "mindisk/slice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mindisk/immersion.hpp"

namespace mindisk {

SliceCurve slice_curve(const WeierstrassParams& params, double x, int n_samples,
                       const QuadratureConfig& config) {
  if (n_samples < 3 || n_samples % 2 == 0) {
    throw std::invalid_argument("slice_curve: n_samples must be odd and >= 3");
  }
  const DomainSpec dom(params.a);
  SliceCurve curve;
  curve.x = x;
  curve.a = params.a;
  curve.y_max = half_width(dom, x);
  const int mid = (n_samples - 1) / 2;
  curve.samples.reserve(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    // (j - mid)/mid hits -1, 0, +1 exactly, so the ends and the midpoint do.
    const double y = curve.y_max * (static_cast<double>(j - mid) / mid);
    SliceSample s;
    s.y = y;
    const UV w = eval_uv(params, {x, y});
    s.u = w.u;
    s.v = w.v;
    const double c = std::cosh(w.v);
    s.tangent = {c * std::sin(w.u), -c * std::cos(w.u)};
    const std::complex<double> p = inplane_position(params, {x, y}, config);
    s.point = {p.real(), p.imag()};
    curve.samples.push_back(s);
  }
  return curve;
}

double angle_spread(const SliceCurve& curve) {
  if (curve.samples.empty()) {
    return 0.0;
  }
  const double u0 = curve.samples[(curve.samples.size() - 1) / 2].u;
  double max_dev = 0.0;
  for (const SliceSample& s : curve.samples) {
    max_dev = std::max(max_dev, std::abs(s.u - u0));
  }
  return 2.0 * max_dev;
}

bool is_graph_over_line(const SliceCurve& curve) {
  if (curve.samples.size() < 2) {
    return true;
  }
  const SliceSample& mid = curve.samples[(curve.samples.size() - 1) / 2];
  // cosh(0) = 1, so the midpoint tangent is already unit length.
  const Eigen::Vector2d dir = mid.tangent;
  double prev = curve.samples.front().point.dot(dir);
  for (size_t k = 1; k < curve.samples.size(); ++k) {
    const double next = curve.samples[k].point.dot(dir);
    if (!(next > prev)) {
      return false;
    }
    prev = next;
  }
  return true;
}

ExcursionStats excursion(const SliceCurve& curve) {
  ExcursionStats stats;
  if (curve.samples.size() < 3) {
    return stats;
  }
  const SliceSample& mid = curve.samples[(curve.samples.size() - 1) / 2];
  const Eigen::Vector2d d_lo = curve.samples.front().point - mid.point;
  const Eigen::Vector2d d_hi = curve.samples.back().point - mid.point;
  stats.lower = std::min(d_lo.norm(), d_hi.norm());
  stats.inner_product = std::max(std::abs(d_lo.dot(mid.tangent)), std::abs(d_hi.dot(mid.tangent)));
  stats.angle_spread = angle_spread(curve);
  return stats;
}

double max_v_bound(double x) {
  if (x == 0.0) {
    throw ZeroSliceHeight("max_v_bound: the slice at x = 0 degenerates");
  }
  return 8.0 / (9.0 * std::abs(x));
}

double inner_product_bound(double x) {
  return std::cosh(max_v_bound(x)) * std::sqrt(x * x + 0.25) / 2.0;
}

double excursion_bound(double x) {
  return inner_product_bound(x) / std::cos(DomainConstants::sector_angle / 2.0);
}

double estimate_embedded_radius(const std::vector<double>& a_grid,
                                const std::vector<double>& x_grid, int n_samples,
                                const QuadratureConfig& config) {
  if (a_grid.empty() || x_grid.empty()) {
    throw std::invalid_argument("estimate_embedded_radius: grids must be non-empty");
  }
  double radius = std::numeric_limits<double>::infinity();
  for (double a : a_grid) {
    const WeierstrassParams params = WeierstrassParams::make(a);
    for (double x : x_grid) {
      const ExcursionStats stats = excursion(slice_curve(params, x, n_samples, config));
      radius = std::min(radius, stats.lower);
    }
  }
  return radius;
}

double axis_turning(const WeierstrassParams& params, double x1, double x2) {
  return eval_uv(params, {x2, 0.0}).u - eval_uv(params, {x1, 0.0}).u;
}

}  // namespace mindisk
