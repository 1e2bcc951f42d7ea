#include "mindisk/weierstrass.hpp"

#include <cmath>

namespace mindisk {

namespace {

void check_point(const WeierstrassParams& params, PlanePoint z) {
  if (!std::isfinite(z.x) || !std::isfinite(z.y)) {
    throw SingularityProximity(z, "non-finite evaluation point");
  }
  const double eps = params.eps_singularity;
  if (std::hypot(z.x, z.y - params.a) < eps || std::hypot(z.x, z.y + params.a) < eps) {
    throw SingularityProximity(z, "evaluation point too close to a singularity");
  }
  if (z.x == 0.0 && std::abs(z.y) >= params.a) {
    throw SingularityProximity(z, "evaluation point on a branch ray");
  }
}

// |h'(z)|^-2 = (x^2 + a^2 - y^2)^2 + (2xy)^2, expanded so that the partials
// below share one denominator. Positive everywhere off the singularities.
double denom(const WeierstrassParams& params, PlanePoint z) {
  const double s = z.x * z.x + params.a * params.a - z.y * z.y;
  const double t = 2.0 * z.x * z.y;
  return s * s + t * t;
}

double curvature_from(double d, double v) {
  const double c = std::cosh(v);
  const double c2 = c * c;
  return -1.0 / (d * c2 * c2);
}

Eigen::Vector3d normal_from(double u, double v) {
  // n = (2 Re g, 2 Im g, |g|^2 - 1) / (|g|^2 + 1) with |g| = exp(-v). The
  // algebraic identity |n|^2 = 1 holds exactly, not just approximately.
  const double m = std::exp(-v);
  const double m2 = m * m;
  return Eigen::Vector3d(2.0 * m * std::cos(u), 2.0 * m * std::sin(u), m2 - 1.0) / (m2 + 1.0);
}

}  // namespace

UV eval_uv(const WeierstrassParams& params, PlanePoint z) {
  check_point(params, z);
  const double a = params.a;
  UV w;
  w.u = (std::atan2(z.x, a - z.y) - std::atan2(-z.x, a + z.y)) / (2.0 * a);
  const double num = (a + z.y) * (a + z.y) + z.x * z.x;
  const double den = (a - z.y) * (a - z.y) + z.x * z.x;
  w.v = std::log(num / den) / (4.0 * a);
  return w;
}

std::complex<double> gauss_map(const WeierstrassParams& params, PlanePoint z) {
  const UV w = eval_uv(params, z);
  const double m = std::exp(-w.v);
  return {m * std::cos(w.u), m * std::sin(w.u)};
}

std::complex<double> d_log_gauss(const WeierstrassParams& params, PlanePoint z) {
  check_point(params, z);
  // 1 / (z^2 + a^2) written out in real and imaginary parts.
  const double s = z.x * z.x + params.a * params.a - z.y * z.y;
  const double t = 2.0 * z.x * z.y;
  const double d = s * s + t * t;
  return {s / d, -t / d};
}

UVPartials uv_partials(const WeierstrassParams& params, PlanePoint z) {
  check_point(params, z);
  const double s = z.x * z.x + params.a * params.a - z.y * z.y;
  const double t = 2.0 * z.x * z.y;
  const double d = s * s + t * t;
  UVPartials p;
  p.du_dy = t / d;
  p.dv_dy = s / d;
  p.du_dx = p.dv_dy;
  p.dv_dx = -p.du_dy;
  return p;
}

double gauss_curvature(const WeierstrassParams& params, PlanePoint z) {
  const UV w = eval_uv(params, z);
  return curvature_from(denom(params, z), w.v);
}

Eigen::Vector3d unit_normal(const WeierstrassParams& params, PlanePoint z) {
  const UV w = eval_uv(params, z);
  return normal_from(w.u, w.v);
}

GaussData gauss_data(const WeierstrassParams& params, PlanePoint z) {
  const UV w = eval_uv(params, z);
  GaussData g;
  g.u = w.u;
  g.v = w.v;
  const double m = std::exp(-w.v);
  g.g = {m * std::cos(w.u), m * std::sin(w.u)};
  g.normal = normal_from(w.u, w.v);
  g.gauss_curvature = curvature_from(denom(params, z), w.v);
  g.second_fund_sq = -2.0 * g.gauss_curvature;
  return g;
}

}  // namespace mindisk
