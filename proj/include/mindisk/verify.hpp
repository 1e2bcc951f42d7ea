#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mindisk/immersion.hpp"
#include "mindisk/intersect.hpp"
#include "mindisk/quadrature.hpp"
#include "mindisk/rng.hpp"
#include "mindisk/slice.hpp"
#include "mindisk/types.hpp"

// Numerical certification suites. Each suite evaluates a family of
// inequalities or limit statements on deterministic or seeded sample sets and
// reports, per check, the measured extreme value, the bound it must respect,
// the margin, and the worst-case witness point. Reports are bit-for-bit
// reproducible given the same grids, seed, and tolerances.

namespace mindisk {

/// Sample location where a check attains its extreme value.
struct Witness {
  double a = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct CheckRecord {
  std::string name;
  std::string bound_text;  // human-readable formula for the bound
  Witness witness;
  double measured = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string note;  // caveats and derivation remarks, empty if none
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, std::string>> env;  // ordered metadata
};

bool all_passed(const VerificationReport& report);

/// Merges several reports into one under a new suite name; env entries are
/// concatenated with per-source prefixes.
VerificationReport merge_reports(const std::string& suite,
                                 const std::vector<VerificationReport>& parts);

/// Pointwise derivative inequalities on seeded points of Omega_a:
/// |du/dy| <= 4|xy|/(x^2+a^2)^2, dv/dy > 3/(8(x^2+a^2)), and sign(v) = sign(y).
VerificationReport check_derivative_bounds(const WeierstrassParams& params, int sample_count,
                                           std::uint64_t seed = kDefaultSeed);

/// |K(0)| = a^-4 to relative 1e-10, |A|^2(0) = 2 a^-4, and log-log slope of
/// |K(0)| against a equal to -4 within 1e-6.
VerificationReport check_curvature_blowup(const std::vector<double>& a_list);

/// max |K| over {|x| >= delta} within the strip is at most 16/(9 delta^4),
/// uniformly over the given a values. The envelope follows from
/// |z^2 + a^2|^2 >= (9/16)(x^2+a^2)^2 on the strip, where y^2 <= (x^2+a^2)/4.
VerificationReport check_uniform_curvature(double delta, const std::vector<double>& a_list,
                                           int sample_count, std::uint64_t seed = kDefaultSeed);

/// Conformality identities at the grid points (residuals <= 1e-12), exact
/// axis tangent, and O(h^2) decay of the five-point Laplacian of F across
/// step halvings h, h/2, h/4.
VerificationReport check_minimality(const WeierstrassParams& params,
                                    const std::vector<PlanePoint>& grid, double h_step,
                                    const QuadratureConfig& config = {});

/// Interior grid for check_minimality: points of the rectangle
/// [x_lo, x_hi] x {-y_frac w, 0, +y_frac w} whose h-neighborhood stays inside
/// the domain.
std::vector<PlanePoint> minimality_grid(const WeierstrassParams& params, double h_step);

/// Sup-norm Cauchy decay of F over a fixed rectangle along the parameter
/// sequence, for the map itself and its first and second central differences;
/// third components must agree exactly.
VerificationReport check_convergence(const std::vector<double>& a_seq, PlanePoint rect_lo,
                                     PlanePoint rect_hi, const QuadratureConfig& config = {});

/// Axis turn counts over (x1, x2) strictly increase as a decreases and match
/// the closed form (arctan(x2/a) - arctan(x1/a)) / (2 pi a).
VerificationReport check_spiraling(const std::vector<double>& a_list, double x1, double x2);

/// Zero properly-intersecting non-adjacent triangle pairs in the given
/// (already clipped) mesh.
VerificationReport check_embeddedness(const TriangleMesh& mesh, double tol = 1e-10);

/// Slice sweep over (a, x) grids: tangent sector and graph property, the
/// excursion floor away from the bridge start, the a-uniform upper bounds on
/// |v| / inner products / excursion, and the stability of the estimated
/// embedded cylinder radius under a-grid refinement.
VerificationReport check_slices(const std::vector<double>& a_grid,
                                const std::vector<double>& x_grid, int n_samples,
                                const QuadratureConfig& config = {});

/// On a decreasing log grid of x values, max_v_bound(x) * |x| is constant
/// 8/9 and inner_product_bound grows monotonically with per-halving factor
/// >= 2 as x -> 0.
VerificationReport check_bound_growth(const std::vector<double>& x_desc);

}  // namespace mindisk
