#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "mindisk/immersion.hpp"

// Self-intersection testing for surface meshes. Broad phase hashes triangle
// bounding boxes into a uniform grid; narrow phase runs an interval-overlap
// triangle-triangle test on the surviving non-adjacent pairs. Pairs sharing a
// vertex index are never reported, and contacts closer than the tolerance are
// treated as touching, not crossing.

namespace mindisk {

struct TrianglePairHit {
  int tri_a = -1;
  int tri_b = -1;
};

/// Keeps the triangles whose three vertices satisfy x1^2 + x2^2 <= radius^2,
/// dropping unreferenced vertices and reindexing.
TriangleMesh clip_to_cylinder(const TriangleMesh& mesh, double radius);

/// True iff the two triangles properly intersect: crossings deeper than tol
/// count, touches within tol do not. Handles the coplanar case.
bool triangles_intersect(const std::array<Eigen::Vector3d, 3>& t1,
                         const std::array<Eigen::Vector3d, 3>& t2, double tol);

/// All properly intersecting pairs of non-adjacent triangles, sorted by
/// (tri_a, tri_b) with tri_a < tri_b.
std::vector<TrianglePairHit> self_intersections(const TriangleMesh& mesh, double tol = 1e-10);

}  // namespace mindisk
