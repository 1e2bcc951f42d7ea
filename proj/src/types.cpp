#include "mindisk/types.hpp"

#include <sstream>

namespace mindisk {

namespace {

std::string with_point(const std::string& what, PlanePoint z) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at z = (" << z.x << ", " << z.y << ")";
  return os.str();
}

}  // namespace

WeierstrassParams WeierstrassParams::make(double a) {
  if (!(a > 0.0) || !(a <= 0.5)) {
    std::ostringstream os;
    os.precision(17);
    os << "family parameter a must lie in (0, 1/2], got " << a;
    throw std::invalid_argument(os.str());
  }
  WeierstrassParams p;
  p.a = a;
  p.eps_singularity = 1e-9 * a;
  return p;
}

SingularityProximity::SingularityProximity(PlanePoint z, const std::string& what)
    : Error(with_point(what, z)), z(z) {}

OutsideDomain::OutsideDomain(PlanePoint z, const std::string& what)
    : Error(with_point(what, z)), z(z) {}

QuadratureFailure::QuadratureFailure(double error_estimate, const std::string& what)
    : Error(what), error_estimate(error_estimate) {}

}  // namespace mindisk
