#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "mindisk/domain.hpp"
#include "mindisk/quadrature.hpp"
#include "mindisk/types.hpp"
#include "mindisk/weierstrass.hpp"

// Conformal immersion of Omega_a built from the Gauss-map data: with
// g = exp(-v) exp(iu) and height differential dz, the coordinate tangents are
//
//   dF/dx = (sinh v cos u, sinh v sin u, 1)
//   dF/dy = (cosh v sin u, -cosh v cos u, 0)
//
// and F itself is recovered by integrating from the base point z = 0. Along
// the real axis F(x, 0) = (0, 0, x) exactly, so the canonical evaluation path
// runs up the axis and then vertically; the third coordinate is always set to
// x rather than integrated.

namespace mindisk {

struct SurfaceSample {
  PlanePoint param;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d normal = Eigen::Vector3d::Zero();
  double gauss_curvature = 0.0;
  double u = 0.0;
  double v = 0.0;
};

struct TriangleMesh {
  std::vector<SurfaceSample> vertices;
  std::vector<std::array<int, 3>> triangles;  // CCW as seen along the normal
  WeierstrassParams params;
  double x_max = 0.0;
};

Eigen::Vector3d tangent_x(const WeierstrassParams& params, PlanePoint z);
Eigen::Vector3d tangent_y(const WeierstrassParams& params, PlanePoint z);

/// First two coordinates of F(x, y) as one complex number, i.e. the integral
/// of -i cosh(v(x, t)) exp(iu(x, t)) over t in [0, y]. Returns exactly 0 when
/// y = 0.
std::complex<double> inplane_position(const WeierstrassParams& params, PlanePoint z,
                                      const QuadratureConfig& config = {});

/// F at a single point, via the canonical axis-then-vertical path.
SurfaceSample immerse(const WeierstrassParams& params, PlanePoint z,
                      const QuadratureConfig& config = {});

/// Displacement accumulated along a piecewise axis-parallel path. Each
/// segment must be horizontal or vertical and must stay inside Omega_a
/// (checked via the segment's bounding rectangle). Closed paths return zero
/// and reversed paths the bitwise negation, because every segment is
/// integrated in canonical low-to-high order and reoriented by sign.
Eigen::Vector3d immerse_via_path(const WeierstrassParams& params,
                                 const std::vector<PlanePoint>& waypoints,
                                 const QuadratureConfig& config = {});

/// Immerses the grid_sample grid and triangulates each cell with two
/// triangles. Triangles of near-zero area (below 1e-14) are dropped.
TriangleMesh build_mesh(const WeierstrassParams& params, double x_max, int nx, int ny,
                        const QuadratureConfig& config = {});

}  // namespace mindisk
