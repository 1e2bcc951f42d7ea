#pragma once

#include <complex>

#include <Eigen/Dense>

#include "mindisk/types.hpp"

// Closed-form Gauss-map data for the one-parameter family of minimal disks
// generated by g(z) = exp(i h(z)), h(z) = (1/a) arctan(z/a), height
// differential dz. Writing h = u + iv on the principal branch gives
//
//   u(x, y) = (atan2(x, a - y) - atan2(-x, a + y)) / (2a)
//   v(x, y) = log( ((a + y)^2 + x^2) / ((a - y)^2 + x^2) ) / (4a)
//
// which is what everything below evaluates. The only singularities are the
// logarithmic ones at z = +-ia; the principal branch jumps across the rays
// {x = 0, |y| >= a}, which the guard in every entry point rejects. On the
// real axis v vanishes identically and u(x, 0) = arctan(x/a) / a.
//
// Everything in this header is pointwise and closed-form; path integration of
// the height differential lives in immersion.hpp.

namespace mindisk {

/// Angle / log-modulus split of the Gauss map: g = exp(-v) exp(iu).
struct UV {
  double u = 0.0;
  double v = 0.0;
};

/// First partials of (u, v); the pair (u, v) is holomorphic in z, so
/// du_dx = dv_dy and dv_dx = -du_dy hold identically.
struct UVPartials {
  double du_dy = 0.0;
  double dv_dy = 0.0;
  double du_dx = 0.0;
  double dv_dx = 0.0;
};

/// Pointwise bundle for callers that need several quantities at once.
/// All fields are computed from a single (u, v) evaluation, so they are
/// bitwise consistent with the individual accessors below.
struct GaussData {
  double u = 0.0;
  double v = 0.0;
  std::complex<double> g;
  Eigen::Vector3d normal = Eigen::Vector3d::Zero();
  double gauss_curvature = 0.0;
  double second_fund_sq = 0.0;  // |A|^2 = -2K for these conformal immersions
};

UV eval_uv(const WeierstrassParams& params, PlanePoint z);

std::complex<double> gauss_map(const WeierstrassParams& params, PlanePoint z);

/// h'(z) = 1 / (z^2 + a^2), the z-derivative of the angle function.
std::complex<double> d_log_gauss(const WeierstrassParams& params, PlanePoint z);

UVPartials uv_partials(const WeierstrassParams& params, PlanePoint z);

/// K = -|h'(z)|^2 / cosh(v)^4; strictly negative away from the singularities.
double gauss_curvature(const WeierstrassParams& params, PlanePoint z);

/// Stereographic image of g: exactly unit length by construction.
Eigen::Vector3d unit_normal(const WeierstrassParams& params, PlanePoint z);

GaussData gauss_data(const WeierstrassParams& params, PlanePoint z);

}  // namespace mindisk
