// Three-dimensional convex hull: deterministic quickhull with conflict
// lists and relative-epsilon visibility.  Exactly coplanar clusters may be
// triangulated arbitrarily and may omit interior-of-face vertices from the
// triangle list; consumers that care about polygonal faces re-collect the
// points lying on a face plane (see equivariant_hull).
#pragma once

#include <array>
#include <vector>

#include "adslab/linalg.hpp"

namespace adslab {

struct Hull3 {
  // Outward-oriented triangles (indices into the input point set).
  std::vector<std::array<int, 3>> triangles;
  // Sorted indices of points appearing in the triangle list.
  std::vector<int> vertex_ids;
  // Interior reference point (used to orient normals).
  Vec3 interior = Vec3::Zero();
};

// Convex hull of at least four affinely independent points.  Throws
// DegenerateHull when the input is (nearly) flat or the horizon cannot be
// stitched unambiguously.
Hull3 convex_hull(const std::vector<Vec3>& pts, double eps_rel = 1e-10);

// Max signed violation  nu . p - offset  over all points and hull faces,
// relative to the face offset scale; <= ~eps_rel for a correct hull.
double hull_support_violation(const std::vector<Vec3>& pts, const Hull3& hull);

}  // namespace adslab
