#pragma once

#include <complex>
#include <functional>

#include "mindisk/types.hpp"

namespace mindisk {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 60;
};

/// Adaptive Gauss-Kronrod over [t0, t1]. Degenerate intervals integrate to
/// zero; swapping the endpoints negates the result bitwise. Throws
/// QuadratureFailure when the error estimate exceeds
/// max(abs_tol, rel_tol * |result|).
std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double t0, double t1, const QuadratureConfig& config);

double integrate_real(const std::function<double(double)>& f, double t0, double t1,
                      const QuadratureConfig& config);

}  // namespace mindisk
