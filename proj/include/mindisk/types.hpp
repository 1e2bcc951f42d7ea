#pragma once

#include <stdexcept>
#include <string>

namespace mindisk {

/// A point z = x + iy of the parameter plane.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

/// Family parameter together with the guard distance kept around the two
/// logarithmic singularities at (0, +-a).
struct WeierstrassParams {
  double a = 0.5;
  double eps_singularity = 0.5e-9;

  /// Validates 0 < a <= 1/2 and sets eps_singularity to 1e-9 * a.
  static WeierstrassParams make(double a);
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Evaluation point within eps_singularity of (0, +-a), or on the vertical
/// rays {x = 0, |y| >= a} where the angle function jumps.
struct SingularityProximity : Error {
  PlanePoint z;
  SingularityProximity(PlanePoint z, const std::string& what);
};

/// Parameter point outside the immersion domain.
struct OutsideDomain : Error {
  PlanePoint z;
  OutsideDomain(PlanePoint z, const std::string& what);
};

/// An integration path segment exits the immersion domain.
struct PathLeavesDomain : Error {
  using Error::Error;
};

/// Adaptive quadrature could not meet the requested tolerance.
struct QuadratureFailure : Error {
  double error_estimate = 0.0;
  QuadratureFailure(double error_estimate, const std::string& what);
};

/// Mesh or sampling resolution outside the supported range.
struct InvalidResolution : Error {
  using Error::Error;
};

/// A rectangle that was required to sit inside the domain does not.
struct RectNotInDomain : Error {
  using Error::Error;
};

/// Slice requested at x = 0, where the slice degenerates.
struct ZeroSliceHeight : Error {
  using Error::Error;
};

}  // namespace mindisk
