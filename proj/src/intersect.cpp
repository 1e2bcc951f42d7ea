#include "mindisk/intersect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

namespace mindisk {

namespace {

using Tri = std::array<Eigen::Vector3d, 3>;

// Interval along the plane-crossing line where a triangle meets the other
// triangle's plane. d[] are signed distances of the vertices to that plane
// (unit normal), s[] their scalar projections onto the line direction.
bool crossing_interval(const double d[3], const double s[3], double eps, double* lo, double* hi) {
  int pos[3], neg[3], zer[3];
  int np = 0, nn = 0, nz = 0;
  for (int i = 0; i < 3; ++i) {
    if (d[i] > eps) {
      pos[np++] = i;
    } else if (d[i] < -eps) {
      neg[nn++] = i;
    } else {
      zer[nz++] = i;
    }
  }
  // Without vertices strictly on both sides the triangle at most touches the
  // plane (vertex or edge contact); that is not a crossing.
  if (np == 0 || nn == 0) {
    return false;
  }
  double t[4];
  int nt = 0;
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < nn; ++j) {
      const int vi = pos[i];
      const int vj = neg[j];
      t[nt++] = s[vi] + (s[vj] - s[vi]) * (d[vi] / (d[vi] - d[vj]));
    }
  }
  for (int k = 0; k < nz; ++k) {
    t[nt++] = s[zer[k]];
  }
  *lo = *std::min_element(t, t + nt);
  *hi = *std::max_element(t, t + nt);
  return true;
}

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// -1 / 0 / +1 for p beyond tol right of, within tol of, beyond tol left of
// the directed line a -> b.
int line_side(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& p,
              double tol) {
  const double len = (b - a).norm();
  if (len <= tol) {
    return 0;
  }
  const double offset = cross2(b - a, p - a) / len;
  if (offset > tol) {
    return 1;
  }
  if (offset < -tol) {
    return -1;
  }
  return 0;
}

bool segments_cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                    const Eigen::Vector2d& d, double tol) {
  return line_side(a, b, c, tol) * line_side(a, b, d, tol) == -1 &&
         line_side(c, d, a, tol) * line_side(c, d, b, tol) == -1;
}

bool strictly_inside(const std::array<Eigen::Vector2d, 3>& tri, const Eigen::Vector2d& p,
                     double tol) {
  const int s0 = line_side(tri[0], tri[1], p, tol);
  const int s1 = line_side(tri[1], tri[2], p, tol);
  const int s2 = line_side(tri[2], tri[0], p, tol);
  return s0 != 0 && s0 == s1 && s1 == s2;
}

bool coplanar_intersect(const Tri& t1, const Tri& t2, const Eigen::Vector3d& n, double tol) {
  // Orthonormal in-plane coordinates; the common normal direction is ignored.
  Eigen::Vector3d e_u = t1[1] - t1[0];
  const double len = e_u.norm();
  if (len <= tol) {
    return false;
  }
  e_u /= len;
  const Eigen::Vector3d e_v = n.cross(e_u);
  auto flatten = [&](const Eigen::Vector3d& p) {
    return Eigen::Vector2d(e_u.dot(p - t1[0]), e_v.dot(p - t1[0]));
  };
  std::array<Eigen::Vector2d, 3> p1{flatten(t1[0]), flatten(t1[1]), flatten(t1[2])};
  std::array<Eigen::Vector2d, 3> p2{flatten(t2[0]), flatten(t2[1]), flatten(t2[2])};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (segments_cross(p1[i], p1[(i + 1) % 3], p2[j], p2[(j + 1) % 3], tol)) {
        return true;
      }
    }
  }
  const Eigen::Vector2d c1 = (p1[0] + p1[1] + p1[2]) / 3.0;
  const Eigen::Vector2d c2 = (p2[0] + p2[1] + p2[2]) / 3.0;
  for (int i = 0; i < 3; ++i) {
    if (strictly_inside(p1, p2[i], tol) || strictly_inside(p2, p1[i], tol)) {
      return true;
    }
  }
  return strictly_inside(p1, c2, tol) || strictly_inside(p2, c1, tol);
}

uint64_t cell_key(int64_t ix, int64_t iy, int64_t iz) {
  const uint64_t h = static_cast<uint64_t>(ix) * 0x9E3779B185EBCA87ull ^
                     static_cast<uint64_t>(iy) * 0xC2B2AE3D27D4EB4Full ^
                     static_cast<uint64_t>(iz) * 0x165667B19E3779F9ull;
  return h;
}

}  // namespace

TriangleMesh clip_to_cylinder(const TriangleMesh& mesh, double radius) {
  if (!(radius >= 0.0)) {
    throw std::invalid_argument("clip_to_cylinder: radius must be non-negative");
  }
  const double r2 = radius * radius;
  auto inside = [&](int v) {
    const Eigen::Vector3d& p = mesh.vertices[v].position;
    return p.x() * p.x() + p.y() * p.y() <= r2;
  };
  TriangleMesh out;
  out.params = mesh.params;
  out.x_max = mesh.x_max;
  std::vector<int> remap(mesh.vertices.size(), -1);
  for (const auto& tri : mesh.triangles) {
    if (!(inside(tri[0]) && inside(tri[1]) && inside(tri[2]))) {
      continue;
    }
    std::array<int, 3> mapped{};
    for (int k = 0; k < 3; ++k) {
      int& slot = remap[tri[k]];
      if (slot < 0) {
        slot = static_cast<int>(out.vertices.size());
        out.vertices.push_back(mesh.vertices[tri[k]]);
      }
      mapped[k] = slot;
    }
    out.triangles.push_back(mapped);
  }
  return out;
}

bool triangles_intersect(const Tri& t1, const Tri& t2, double tol) {
  Eigen::Vector3d n1 = (t1[1] - t1[0]).cross(t1[2] - t1[0]);
  Eigen::Vector3d n2 = (t2[1] - t2[0]).cross(t2[2] - t2[0]);
  const double l1 = n1.norm();
  const double l2 = n2.norm();
  if (l1 <= 1e-30 || l2 <= 1e-30) {
    return false;  // degenerate input; nothing meaningful to report
  }
  n1 /= l1;
  n2 /= l2;
  double d2[3], d1[3];
  for (int i = 0; i < 3; ++i) {
    d2[i] = n1.dot(t2[i] - t1[0]);
    d1[i] = n2.dot(t1[i] - t2[0]);
  }
  auto one_side = [tol](const double d[3]) {
    return (d[0] > tol && d[1] > tol && d[2] > tol) ||
           (d[0] < -tol && d[1] < -tol && d[2] < -tol);
  };
  if (one_side(d2) || one_side(d1)) {
    return false;
  }
  const bool coplanar = std::abs(d2[0]) <= tol && std::abs(d2[1]) <= tol && std::abs(d2[2]) <= tol;
  Eigen::Vector3d dir = n1.cross(n2);
  const double ld = dir.norm();
  if (coplanar || ld < 1e-12) {
    return coplanar_intersect(t1, t2, n1, tol);
  }
  dir /= ld;
  double s1[3], s2[3];
  for (int i = 0; i < 3; ++i) {
    s1[i] = dir.dot(t1[i]);
    s2[i] = dir.dot(t2[i]);
  }
  double lo1, hi1, lo2, hi2;
  if (!crossing_interval(d1, s1, tol, &lo1, &hi1)) {
    return false;
  }
  if (!crossing_interval(d2, s2, tol, &lo2, &hi2)) {
    return false;
  }
  return std::min(hi1, hi2) - std::max(lo1, lo2) > tol;
}

std::vector<TrianglePairHit> self_intersections(const TriangleMesh& mesh, double tol) {
  const int n = static_cast<int>(mesh.triangles.size());
  std::vector<TrianglePairHit> hits;
  if (n < 2) {
    return hits;
  }
  std::vector<Eigen::Vector3d> box_lo(n), box_hi(n);
  double mean_extent = 0.0;
  for (int t = 0; t < n; ++t) {
    const auto& tri = mesh.triangles[t];
    Eigen::Vector3d lo = mesh.vertices[tri[0]].position;
    Eigen::Vector3d hi = lo;
    for (int k = 1; k < 3; ++k) {
      lo = lo.cwiseMin(mesh.vertices[tri[k]].position);
      hi = hi.cwiseMax(mesh.vertices[tri[k]].position);
    }
    const Eigen::Vector3d pad(tol, tol, tol);
    box_lo[t] = lo - pad;
    box_hi[t] = hi + pad;
    mean_extent += (box_hi[t] - box_lo[t]).maxCoeff();
  }
  mean_extent /= n;
  const double cell = std::max(2.0 * mean_extent, 1e-12);

  std::unordered_map<uint64_t, std::vector<int>> buckets;
  buckets.reserve(static_cast<size_t>(n) * 2);
  auto cell_index = [cell](double w) { return static_cast<int64_t>(std::floor(w / cell)); };
  for (int t = 0; t < n; ++t) {
    const int64_t x0 = cell_index(box_lo[t].x()), x1 = cell_index(box_hi[t].x());
    const int64_t y0 = cell_index(box_lo[t].y()), y1 = cell_index(box_hi[t].y());
    const int64_t z0 = cell_index(box_lo[t].z()), z1 = cell_index(box_hi[t].z());
    for (int64_t ix = x0; ix <= x1; ++ix) {
      for (int64_t iy = y0; iy <= y1; ++iy) {
        for (int64_t iz = z0; iz <= z1; ++iz) {
          buckets[cell_key(ix, iy, iz)].push_back(t);
        }
      }
    }
  }

  auto adjacent = [&](int a, int b) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (mesh.triangles[a][i] == mesh.triangles[b][j]) {
          return true;
        }
      }
    }
    return false;
  };
  auto boxes_overlap = [&](int a, int b) {
    return (box_lo[a].array() <= box_hi[b].array()).all() &&
           (box_lo[b].array() <= box_hi[a].array()).all();
  };

  std::unordered_set<uint64_t> seen;
  std::vector<std::pair<int, int>> candidates;
  for (const auto& [key, members] : buckets) {
    (void)key;
    for (size_t i = 0; i < members.size(); ++i) {
      for (size_t j = i + 1; j < members.size(); ++j) {
        const int a = std::min(members[i], members[j]);
        const int b = std::max(members[i], members[j]);
        if (a == b || !boxes_overlap(a, b) || adjacent(a, b)) {
          continue;
        }
        const uint64_t id = static_cast<uint64_t>(a) * static_cast<uint64_t>(n) + b;
        if (seen.insert(id).second) {
          candidates.emplace_back(a, b);
        }
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());

  for (const auto& [a, b] : candidates) {
    const Tri ta{mesh.vertices[mesh.triangles[a][0]].position,
                 mesh.vertices[mesh.triangles[a][1]].position,
                 mesh.vertices[mesh.triangles[a][2]].position};
    const Tri tb{mesh.vertices[mesh.triangles[b][0]].position,
                 mesh.vertices[mesh.triangles[b][1]].position,
                 mesh.vertices[mesh.triangles[b][2]].position};
    if (triangles_intersect(ta, tb, tol)) {
      hits.push_back({a, b});
    }
  }
  return hits;
}

}  // namespace mindisk
