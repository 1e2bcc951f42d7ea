#include "mindisk/export.hpp"

#include <cstdio>
#include <fstream>

namespace mindisk {

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot open for writing: " + path);
  }
  return out;
}

}  // namespace

void write_obj(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out = open_or_throw(path);
  char line[128];
  for (const SurfaceSample& s : mesh.vertices) {
    std::snprintf(line, sizeof line, "v %.6f %.6f %.6f\n", s.position.x(), s.position.y(),
                  s.position.z());
    out << line;
  }
  for (const SurfaceSample& s : mesh.vertices) {
    std::snprintf(line, sizeof line, "vn %.6f %.6f %.6f\n", s.normal.x(), s.normal.y(),
                  s.normal.z());
    out << line;
  }
  for (const auto& tri : mesh.triangles) {
    std::snprintf(line, sizeof line, "f %d//%d %d//%d %d//%d\n", tri[0] + 1, tri[0] + 1,
                  tri[1] + 1, tri[1] + 1, tri[2] + 1, tri[2] + 1);
    out << line;
  }
  if (!out) {
    throw Error("write failed: " + path);
  }
}

void write_slice_csv(const SliceCurve& curve, const std::string& path) {
  std::ofstream out = open_or_throw(path);
  out << "y,p1,p2,t1,t2,u,v\n";
  char line[256];
  for (const SliceSample& s : curve.samples) {
    std::snprintf(line, sizeof line, "%.15g,%.15g,%.15g,%.15g,%.15g,%.15g,%.15g\n", s.y,
                  s.point.x(), s.point.y(), s.tangent.x(), s.tangent.y(), s.u, s.v);
    out << line;
  }
  if (!out) {
    throw Error("write failed: " + path);
  }
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["bound"] = c.bound_text;
    cj["witness"] = {{"a", c.witness.a}, {"x", c.witness.x}, {"y", c.witness.y}};
    cj["measured"] = c.measured;
    cj["bound_value"] = c.bound;
    cj["margin"] = c.margin;
    cj["pass"] = c.pass;
    if (!c.note.empty()) {
      cj["note"] = c.note;
    }
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  nlohmann::ordered_json env = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.env) {
    env[key] = value;
  }
  j["env"] = std::move(env);
  return j;
}

std::string report_json_text(const VerificationReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

void write_report_json(const VerificationReport& report, const std::string& path) {
  std::ofstream out = open_or_throw(path);
  out << report_json_text(report);
  if (!out) {
    throw Error("write failed: " + path);
  }
}

}  // namespace mindisk
