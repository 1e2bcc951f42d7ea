#include "mindisk/immersion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mindisk {

namespace {

void require_inside(const DomainSpec& dom, const WeierstrassParams& params, PlanePoint z) {
  (void)params;
  if (!contains(dom, z)) {
    throw OutsideDomain(z, "point outside the immersion domain");
  }
}

std::complex<double> integrate_vertical(const WeierstrassParams& params, double x, double y_lo,
                                        double y_hi, const QuadratureConfig& config) {
  // -i cosh(v) exp(iu) = (cosh v sin u, -cosh v cos u).
  auto f = [&](double t) {
    const UV w = eval_uv(params, {x, t});
    const double c = std::cosh(w.v);
    return std::complex<double>(c * std::sin(w.u), -c * std::cos(w.u));
  };
  return integrate_complex(f, y_lo, y_hi, config);
}

std::complex<double> integrate_horizontal(const WeierstrassParams& params, double y, double x_lo,
                                          double x_hi, const QuadratureConfig& config) {
  // sinh(v) exp(iu): the in-plane part of the x-tangent.
  auto f = [&](double t) {
    const UV w = eval_uv(params, {t, y});
    const double s = std::sinh(w.v);
    return std::complex<double>(s * std::cos(w.u), s * std::sin(w.u));
  };
  return integrate_complex(f, x_lo, x_hi, config);
}

}  // namespace

Eigen::Vector3d tangent_x(const WeierstrassParams& params, PlanePoint z) {
  const DomainSpec dom(params.a);
  require_inside(dom, params, z);
  const UV w = eval_uv(params, z);
  const double s = std::sinh(w.v);
  return {s * std::cos(w.u), s * std::sin(w.u), 1.0};
}

Eigen::Vector3d tangent_y(const WeierstrassParams& params, PlanePoint z) {
  const DomainSpec dom(params.a);
  require_inside(dom, params, z);
  const UV w = eval_uv(params, z);
  const double c = std::cosh(w.v);
  return {c * std::sin(w.u), -c * std::cos(w.u), 0.0};
}

std::complex<double> inplane_position(const WeierstrassParams& params, PlanePoint z,
                                      const QuadratureConfig& config) {
  if (z.y == 0.0) {
    return {0.0, 0.0};
  }
  return integrate_vertical(params, z.x, 0.0, z.y, config);
}

SurfaceSample immerse(const WeierstrassParams& params, PlanePoint z,
                      const QuadratureConfig& config) {
  const DomainSpec dom(params.a);
  require_inside(dom, params, z);
  const std::complex<double> w = inplane_position(params, z, config);
  const GaussData g = gauss_data(params, z);
  SurfaceSample s;
  s.param = z;
  // The third coordinate of F is x itself; it is never integrated.
  s.position = {w.real(), w.imag(), z.x};
  s.normal = g.normal;
  s.gauss_curvature = g.gauss_curvature;
  s.u = g.u;
  s.v = g.v;
  return s;
}

Eigen::Vector3d immerse_via_path(const WeierstrassParams& params,
                                 const std::vector<PlanePoint>& waypoints,
                                 const QuadratureConfig& config) {
  if (waypoints.empty()) {
    throw std::invalid_argument("immerse_via_path: empty waypoint list");
  }
  const DomainSpec dom(params.a);
  Eigen::Vector3d displacement = Eigen::Vector3d::Zero();
  for (size_t k = 0; k + 1 < waypoints.size(); ++k) {
    const PlanePoint s = waypoints[k];
    const PlanePoint e = waypoints[k + 1];
    if (s.x == e.x && s.y == e.y) {
      continue;
    }
    if (s.x != e.x && s.y != e.y) {
      throw std::invalid_argument("immerse_via_path: segments must be axis-parallel");
    }
    if (!rectangle_inside(dom, s, e)) {
      throw PathLeavesDomain("immerse_via_path: a segment leaves the domain");
    }
    // Each segment is integrated in canonical low-to-high order and the
    // orientation applied afterwards, so reversing a path negates every term.
    if (s.y == e.y) {
      const double lo = std::min(s.x, e.x);
      const double hi = std::max(s.x, e.x);
      const double sign = e.x >= s.x ? 1.0 : -1.0;
      const std::complex<double> w = integrate_horizontal(params, s.y, lo, hi, config);
      displacement[0] += sign * w.real();
      displacement[1] += sign * w.imag();
      displacement[2] += e.x - s.x;
    } else {
      const double lo = std::min(s.y, e.y);
      const double hi = std::max(s.y, e.y);
      const double sign = e.y >= s.y ? 1.0 : -1.0;
      const std::complex<double> w = integrate_vertical(params, s.x, lo, hi, config);
      displacement[0] += sign * w.real();
      displacement[1] += sign * w.imag();
    }
  }
  return displacement;
}

TriangleMesh build_mesh(const WeierstrassParams& params, double x_max, int nx, int ny,
                        const QuadratureConfig& config) {
  const DomainSpec dom(params.a);
  TriangleMesh mesh;
  mesh.params = params;
  mesh.x_max = x_max;
  const std::vector<PlanePoint> grid = grid_sample(dom, x_max, nx, ny);
  mesh.vertices.reserve(grid.size());
  for (const PlanePoint& z : grid) {
    mesh.vertices.push_back(immerse(params, z, config));
  }
  auto index = [ny](int i, int j) { return i * ny + j; };
  auto area_ok = [&](int va, int vb, int vc) {
    const Eigen::Vector3d& pa = mesh.vertices[va].position;
    const Eigen::Vector3d& pb = mesh.vertices[vb].position;
    const Eigen::Vector3d& pc = mesh.vertices[vc].position;
    return 0.5 * (pb - pa).cross(pc - pa).norm() > 1e-14;
  };
  mesh.triangles.reserve(2 * static_cast<size_t>(nx - 1) * static_cast<size_t>(ny - 1));
  for (int i = 0; i + 1 < nx; ++i) {
    for (int j = 0; j + 1 < ny; ++j) {
      const int v00 = index(i, j);
      const int v10 = index(i + 1, j);
      const int v11 = index(i + 1, j + 1);
      const int v01 = index(i, j + 1);
      if (area_ok(v00, v10, v11)) {
        mesh.triangles.push_back({v00, v10, v11});
      }
      if (area_ok(v00, v11, v01)) {
        mesh.triangles.push_back({v00, v11, v01});
      }
    }
  }
  return mesh;
}

}  // namespace mindisk
