#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mindisk/domain.hpp"
#include "mindisk/quadrature.hpp"
#include "mindisk/types.hpp"
#include "mindisk/weierstrass.hpp"

// Horizontal slices of the immersed disk: for fixed x, the curve
// y -> (F_1(x, y), F_2(x, y)) traced over the full strip height. Away from
// the bridge region these curves stay inside a tangent sector of opening
// sector_angle, are graphs over their central tangent line, and travel a
// bounded, strictly positive distance from their midpoint; those three facts
// are what the functions below measure and bound.

namespace mindisk {

struct SliceSample {
  double y = 0.0;
  Eigen::Vector2d point = Eigen::Vector2d::Zero();    // in-plane position
  Eigen::Vector2d tangent = Eigen::Vector2d::Zero();  // in-plane y-tangent
  double u = 0.0;
  double v = 0.0;
};

/// Samples ordered by y over [-y_max, y_max]; odd count, so the middle sample
/// sits exactly at y = 0 where the point is exactly the origin.
struct SliceCurve {
  double x = 0.0;
  double a = 0.0;
  double y_max = 0.0;
  std::vector<SliceSample> samples;
};

/// Distances and projections of the slice endpoints from the midpoint.
struct ExcursionStats {
  double lower = 0.0;          // smaller endpoint distance from the midpoint
  double inner_product = 0.0;  // larger |<endpoint - midpoint, unit mid tangent>|
  double angle_spread = 0.0;   // full tangent-direction spread, radians
};

/// Traces the slice at height x with n_samples points (odd, >= 3). The y-grid
/// hits 0 and +-y_max exactly.
SliceCurve slice_curve(const WeierstrassParams& params, double x, int n_samples,
                       const QuadratureConfig& config = {});

/// Twice the maximum of |u(x, y) - u(x, 0)| over the samples: the full
/// opening of the cone containing every sampled tangent direction.
double angle_spread(const SliceCurve& curve);

/// True iff the projections of the sample points onto the midpoint tangent
/// are strictly increasing in y.
bool is_graph_over_line(const SliceCurve& curve);

ExcursionStats excursion(const SliceCurve& curve);

/// 8 / (9|x|): bound on max |v| over the slice at x, for every a in (0, 1/2].
double max_v_bound(double x);

/// cosh(max_v_bound(x)) * sqrt(x^2 + 1/4) / 2: bound on the endpoint inner
/// products, again uniform in a.
double inner_product_bound(double x);

/// inner_product_bound(x) / cos(sector_angle / 2): bound on the endpoint
/// distances themselves. The half-angle cosine here is deliberate; the
/// full-angle cosine would be negative and bound nothing.
double excursion_bound(double x);

/// Smallest excursion lower value over the (a, x) grid: an empirical radius
/// of a vertical cylinder inside which every sampled sheet stays embedded.
double estimate_embedded_radius(const std::vector<double>& a_grid,
                                const std::vector<double>& x_grid, int n_samples,
                                const QuadratureConfig& config = {});

/// u(x2, 0) - u(x1, 0) = (arctan(x2/a) - arctan(x1/a)) / a: how far the
/// midpoint tangent rotates between two axis heights of the same sign.
/// Totals pi/(2a) over (0, infinity).
double axis_turning(const WeierstrassParams& params, double x1, double x2);

}  // namespace mindisk
