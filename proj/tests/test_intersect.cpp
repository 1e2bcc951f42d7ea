#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "mindisk/immersion.hpp"
#include "mindisk/intersect.hpp"

using namespace mindisk;

namespace {

using Tri = std::array<Eigen::Vector3d, 3>;

// Mesh made of free-floating triangles with no shared indices, so every pair
// is a candidate for the intersection test.
TriangleMesh soup(const std::vector<Tri>& tris) {
  TriangleMesh mesh;
  mesh.params = WeierstrassParams::make(0.5);
  for (const Tri& t : tris) {
    int base = static_cast<int>(mesh.vertices.size());
    for (const Eigen::Vector3d& v : t) {
      SurfaceSample s;
      s.position = v;
      mesh.vertices.push_back(s);
    }
    mesh.triangles.push_back({base, base + 1, base + 2});
  }
  return mesh;
}

TriangleMesh translated(const TriangleMesh& mesh, const Eigen::Vector3d& offset) {
  TriangleMesh out = mesh;
  for (SurfaceSample& s : out.vertices) s.position += offset;
  return out;
}

TriangleMesh merged(const TriangleMesh& a, const TriangleMesh& b) {
  TriangleMesh out = a;
  int base = static_cast<int>(a.vertices.size());
  out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
  for (const auto& t : b.triangles) {
    out.triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
  }
  return out;
}

}  // namespace

TEST_CASE("pairwise triangle predicate") {
  Tri base = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)};
  // Pierces the interior of base through the plane.
  Tri pierce = {Eigen::Vector3d(0.2, 0.2, -0.5), Eigen::Vector3d(0.3, 0.2, 0.5),
                Eigen::Vector3d(0.2, 0.3, 0.5)};
  CHECK(triangles_intersect(base, pierce, 1e-10));

  // Well separated parallel copy.
  Tri above = {Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(1, 0, 1), Eigen::Vector3d(0, 1, 1)};
  CHECK_FALSE(triangles_intersect(base, above, 1e-10));

  // Touching along the shared edge only: contact within tolerance is not a
  // crossing.
  Tri hinge = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, -1, 1)};
  CHECK_FALSE(triangles_intersect(base, hinge, 1e-10));

  // Coplanar overlapping and coplanar disjoint.
  Tri shifted = {Eigen::Vector3d(0.1, 0.1, 0), Eigen::Vector3d(1.1, 0.1, 0),
                 Eigen::Vector3d(0.1, 1.1, 0)};
  CHECK(triangles_intersect(base, shifted, 1e-10));
  Tri far_away = {Eigen::Vector3d(5, 5, 0), Eigen::Vector3d(6, 5, 0), Eigen::Vector3d(5, 6, 0)};
  CHECK_FALSE(triangles_intersect(base, far_away, 1e-10));

  // Identical copies overlap everywhere.
  CHECK(triangles_intersect(base, base, 1e-10));
}

TEST_CASE("cylinder clipping keeps exactly the inside triangles") {
  const WeierstrassParams p = WeierstrassParams::make(0.5);
  TriangleMesh mesh = build_mesh(p, 1.0, 17, 9);
  TriangleMesh clipped = clip_to_cylinder(mesh, 0.17);
  CHECK(clipped.triangles.size() > 0);
  CHECK(clipped.triangles.size() < mesh.triangles.size());
  CHECK(clipped.vertices.size() <= mesh.vertices.size());
  for (const SurfaceSample& s : clipped.vertices) {
    double r2 = s.position.x() * s.position.x() + s.position.y() * s.position.y();
    CHECK(r2 <= 0.17 * 0.17 * (1 + 1e-12));
  }
  for (const auto& tri : clipped.triangles) {
    for (int idx : tri) {
      CHECK(idx >= 0);
      CHECK(idx < static_cast<int>(clipped.vertices.size()));
    }
  }
  // A radius beyond the mesh keeps everything.
  TriangleMesh all = clip_to_cylinder(mesh, 100.0);
  CHECK(all.triangles.size() == mesh.triangles.size());
  CHECK(all.vertices.size() == mesh.vertices.size());
}

TEST_CASE("clean meshes report no self intersections") {
  const WeierstrassParams p = WeierstrassParams::make(0.5);
  TriangleMesh mesh = clip_to_cylinder(build_mesh(p, 1.0, 33, 9), 0.17);
  CHECK(self_intersections(mesh).empty());

  // Two far-apart copies stay clean.
  TriangleMesh two = merged(mesh, translated(mesh, {0.0, 0.0, 10.0}));
  CHECK(self_intersections(two).empty());
}

TEST_CASE("overlapping duplicates are caught") {
  const WeierstrassParams p = WeierstrassParams::make(0.5);
  TriangleMesh mesh = clip_to_cylinder(build_mesh(p, 1.0, 17, 9), 0.17);

  // The duplicate's triangles carry fresh vertex indices, so the adjacency
  // exemption does not hide the coincident geometry.
  TriangleMesh doubled = merged(mesh, mesh);
  auto hits = self_intersections(doubled);
  CHECK(!hits.empty());
  for (size_t i = 0; i < hits.size(); ++i) {
    CHECK(hits[i].tri_a < hits[i].tri_b);
    if (i > 0) {
      bool ordered = hits[i - 1].tri_a < hits[i].tri_a ||
                     (hits[i - 1].tri_a == hits[i].tri_a && hits[i - 1].tri_b < hits[i].tri_b);
      CHECK(ordered);
    }
  }

  // A slightly shifted copy crosses rather than coincides.
  TriangleMesh crossed = merged(mesh, translated(mesh, {1e-3, 0.0, 0.0}));
  CHECK(!self_intersections(crossed).empty());
}

TEST_CASE("crossing soup pair is found regardless of hashing") {
  Tri base = {Eigen::Vector3d(0, 0, 0), Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0)};
  Tri pierce = {Eigen::Vector3d(0.2, 0.2, -0.5), Eigen::Vector3d(0.3, 0.2, 0.5),
                Eigen::Vector3d(0.2, 0.3, 0.5)};
  Tri lonely = {Eigen::Vector3d(4, 4, 4), Eigen::Vector3d(5, 4, 4), Eigen::Vector3d(4, 5, 4)};
  auto hits = self_intersections(soup({base, pierce, lonely}));
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].tri_a == 0);
  CHECK(hits[0].tri_b == 1);
}
