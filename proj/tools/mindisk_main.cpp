#include <cmath>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mindisk/export.hpp"
#include "mindisk/immersion.hpp"
#include "mindisk/intersect.hpp"
#include "mindisk/rng.hpp"
#include "mindisk/slice.hpp"
#include "mindisk/types.hpp"
#include "mindisk/verify.hpp"

namespace {

using namespace mindisk;

const std::vector<double> kDefaultAGrid{0.5, 0.25, 0.125, 0.0625, 0.03125};
const std::vector<double> kDefaultXGrid{0.4, 0.5, 1.0, 2.0, 5.0};

std::uint64_t resolve_seed(const CLI::App* sub, std::uint64_t cli_seed) {
  if (sub->count("--seed") > 0) {
    return cli_seed;
  }
  if (const char* env = std::getenv("MINDISK_SEED")) {
    try {
      size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (env[pos] == '\0') {
        return v;
      }
    } catch (const std::exception&) {
    }
    std::cerr << "warning: MINDISK_SEED is not a valid integer, using default seed\n";
  }
  return kDefaultSeed;
}

int emit_report(const VerificationReport& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report_json_text(report);
  } else {
    write_report_json(report, out_path);
    size_t passed = 0;
    for (const CheckRecord& c : report.checks) {
      passed += c.pass ? 1 : 0;
    }
    std::cout << report.suite << ": " << passed << "/" << report.checks.size()
              << " checks passed, report written to " << out_path << "\n";
  }
  return all_passed(report) ? 0 : 1;
}

void add_quadrature_flags(CLI::App* cmd, QuadratureConfig* config) {
  cmd->add_option("--abs-tol", config->abs_tol, "quadrature absolute tolerance")
      ->capture_default_str();
  cmd->add_option("--rel-tol", config->rel_tol, "quadrature relative tolerance")
      ->capture_default_str();
  cmd->add_option("--max-subdiv", config->max_subdivisions, "quadrature subdivision limit")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal disk family: meshes, slice curves, and certification reports"};
  app.require_subcommand(1);

  auto* mesh_cmd = app.add_subcommand("mesh", "triangulate the surface and write an OBJ file");
  double mesh_a = 0.5;
  double mesh_xmax = 2.0;
  int mesh_nx = 161;
  int mesh_ny = 41;
  std::string mesh_out;
  QuadratureConfig mesh_quad;
  mesh_cmd->add_option("--a", mesh_a, "family parameter in (0, 1/2]")->required();
  mesh_cmd->add_option("--xmax", mesh_xmax, "axis truncation half-height")->capture_default_str();
  mesh_cmd->add_option("--nx", mesh_nx, "grid columns along the axis")->capture_default_str();
  mesh_cmd->add_option("--ny", mesh_ny, "grid rows per column")->capture_default_str();
  mesh_cmd->add_option("-o,--output", mesh_out, "output OBJ path")->required();
  add_quadrature_flags(mesh_cmd, &mesh_quad);

  auto* slice_cmd = app.add_subcommand("slice", "trace one horizontal slice and write a CSV");
  double slice_a = 0.5;
  double slice_x = 1.0;
  int slice_samples = 201;
  std::string slice_out;
  QuadratureConfig slice_quad;
  slice_cmd->add_option("--a", slice_a, "family parameter in (0, 1/2]")->required();
  slice_cmd->add_option("--x", slice_x, "slice height")->required();
  slice_cmd->add_option("--samples", slice_samples, "sample count (odd, >= 3)")
      ->capture_default_str();
  slice_cmd->add_option("-o,--output", slice_out, "output CSV path")->required();
  add_quadrature_flags(slice_cmd, &slice_quad);

  auto* verify_cmd =
      app.add_subcommand("verify", "run the per-member certification suites");
  double verify_a = 0.5;
  int verify_samples = 100000;
  std::uint64_t verify_seed = kDefaultSeed;
  double verify_delta = 0.5;
  std::string verify_out;
  verify_cmd->add_option("--a", verify_a, "family parameter in (0, 1/2]")->required();
  verify_cmd->add_option("--samples", verify_samples, "random sample count")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify_seed, "sampling seed (overrides MINDISK_SEED)");
  verify_cmd->add_option("--delta", verify_delta, "inner radius for the uniform curvature bound")
      ->capture_default_str();
  verify_cmd->add_option("-o,--output", verify_out, "report path (stdout if omitted)");

  auto* blowup_cmd =
      app.add_subcommand("blowup", "check the curvature blow-up law at the center");
  std::vector<double> blowup_alist = kDefaultAGrid;
  std::string blowup_out;
  blowup_cmd->add_option("--alist", blowup_alist, "decreasing family parameters")
      ->delimiter(',')
      ->capture_default_str();
  blowup_cmd->add_option("-o,--output", blowup_out, "report path (stdout if omitted)");

  auto* converge_cmd =
      app.add_subcommand("converge", "check Cauchy decay of the family on a rectangle");
  std::vector<double> converge_rect{0.3, 1.0, -0.05, 0.05};
  int converge_imax = 6;
  std::string converge_out;
  QuadratureConfig converge_quad;
  converge_cmd
      ->add_option("--rect", converge_rect, "rectangle as x_lo,x_hi,y_lo,y_hi")
      ->delimiter(',')
      ->capture_default_str();
  converge_cmd->add_option("--imax", converge_imax, "use a_i = 2^-i for i = 1..imax")
      ->capture_default_str();
  converge_cmd->add_option("-o,--output", converge_out, "report path (stdout if omitted)");
  add_quadrature_flags(converge_cmd, &converge_quad);

  auto* spiral_cmd = app.add_subcommand("spiral", "check axis turn counts against closed form");
  std::vector<double> spiral_alist = kDefaultAGrid;
  double spiral_x1 = 0.01;
  double spiral_x2 = 1.0;
  std::string spiral_out;
  spiral_cmd->add_option("--alist", spiral_alist, "decreasing family parameters")
      ->delimiter(',')
      ->capture_default_str();
  spiral_cmd->add_option("--x1", spiral_x1, "window start (> 0)")->capture_default_str();
  spiral_cmd->add_option("--x2", spiral_x2, "window end (> x1)")->capture_default_str();
  spiral_cmd->add_option("-o,--output", spiral_out, "report path (stdout if omitted)");

  auto* r0_cmd = app.add_subcommand(
      "r0", "sweep slices for the embedded-cylinder radius and excursion bounds");
  std::vector<double> r0_alist = kDefaultAGrid;
  std::vector<double> r0_xlist = kDefaultXGrid;
  int r0_samples = 201;
  std::string r0_out;
  QuadratureConfig r0_quad;
  r0_cmd->add_option("--alist", r0_alist, "family parameters")
      ->delimiter(',')
      ->capture_default_str();
  r0_cmd->add_option("--xlist", r0_xlist, "slice heights (non-zero)")
      ->delimiter(',')
      ->capture_default_str();
  r0_cmd->add_option("--samples", r0_samples, "samples per slice (odd, >= 3)")
      ->capture_default_str();
  r0_cmd->add_option("-o,--output", r0_out, "report path (stdout if omitted)");
  add_quadrature_flags(r0_cmd, &r0_quad);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mesh_cmd) {
      const WeierstrassParams params = WeierstrassParams::make(mesh_a);
      const TriangleMesh mesh = build_mesh(params, mesh_xmax, mesh_nx, mesh_ny, mesh_quad);
      write_obj(mesh, mesh_out);
      std::cout << "mesh: " << mesh.vertices.size() << " vertices, " << mesh.triangles.size()
                << " triangles written to " << mesh_out << "\n";
      return 0;
    }
    if (*slice_cmd) {
      const WeierstrassParams params = WeierstrassParams::make(slice_a);
      const SliceCurve curve = slice_curve(params, slice_x, slice_samples, slice_quad);
      write_slice_csv(curve, slice_out);
      std::cout << "slice: " << curve.samples.size() << " samples written to " << slice_out
                << "\n";
      return 0;
    }
    if (*verify_cmd) {
      const WeierstrassParams params = WeierstrassParams::make(verify_a);
      const std::uint64_t seed = resolve_seed(verify_cmd, verify_seed);
      const QuadratureConfig tight{1e-12, 1e-12, 60};
      const double h_step = 0.04;
      const std::vector<VerificationReport> parts{
          check_derivative_bounds(params, verify_samples, seed),
          check_minimality(params, minimality_grid(params, h_step), h_step, tight),
          check_uniform_curvature(verify_delta, {verify_a},
                                  std::max(verify_samples / 10, 1), seed),
      };
      return emit_report(merge_reports("verify", parts), verify_out);
    }
    if (*blowup_cmd) {
      return emit_report(check_curvature_blowup(blowup_alist), blowup_out);
    }
    if (*converge_cmd) {
      if (converge_rect.size() != 4) {
        throw std::invalid_argument("--rect needs exactly x_lo,x_hi,y_lo,y_hi");
      }
      if (converge_imax < 2) {
        throw std::invalid_argument("--imax must be at least 2");
      }
      std::vector<double> a_seq;
      for (int i = 1; i <= converge_imax; ++i) {
        a_seq.push_back(std::ldexp(1.0, -i));
      }
      const VerificationReport report =
          check_convergence(a_seq, {converge_rect[0], converge_rect[2]},
                            {converge_rect[1], converge_rect[3]}, converge_quad);
      return emit_report(report, converge_out);
    }
    if (*spiral_cmd) {
      return emit_report(check_spiraling(spiral_alist, spiral_x1, spiral_x2), spiral_out);
    }
    if (*r0_cmd) {
      std::vector<double> halvings{0.5};
      while (halvings.size() < 7) {
        halvings.push_back(halvings.back() / 2.0);
      }
      const VerificationReport report = merge_reports(
          "r0", {check_slices(r0_alist, r0_xlist, r0_samples, r0_quad),
                 check_bound_growth(halvings)});
      return emit_report(report, r0_out);
    }
  } catch (const InvalidResolution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RectNotInDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroSliceHeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
