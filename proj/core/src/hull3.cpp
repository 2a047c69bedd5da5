#include "adslab/hull3.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "adslab/errors.hpp"

namespace adslab {
namespace {

struct Face {
  std::array<int, 3> v;   // outward orientation
  Vec3 nu;                // unit normal
  double off;             // plane { x : nu . x = off }
  std::array<int, 3> nb;  // neighbor across edge (v[i], v[i+1])
  std::vector<int> outside;
  bool alive = true;
};

double signed_dist(const Face& f, const Vec3& p) { return f.nu.dot(p) - f.off; }

double eps_for(const Face& f, const Vec3& p, double eps_rel) {
  return eps_rel * (1.0 + std::abs(f.off) + p.norm());
}

}  // namespace

Hull3 convex_hull(const std::vector<Vec3>& pts, double eps_rel) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw DegenerateHull("need at least four points");

  // Initial simplex: spread in x, then farthest from the line, then from
  // the plane.
  int i0 = 0, i1 = 0;
  for (int i = 1; i < n; ++i) {
    if (pts[i](0) < pts[i0](0)) i0 = i;
    if (pts[i](0) > pts[i1](0)) i1 = i;
  }
  if (i0 == i1) i1 = (i0 + 1) % n;
  int i2 = -1;
  double best = 0.0;
  const Vec3 d01 = pts[i1] - pts[i0];
  for (int i = 0; i < n; ++i) {
    const double a = d01.cross(pts[i] - pts[i0]).norm();
    if (a > best) best = a, i2 = i;
  }
  if (i2 < 0) throw DegenerateHull("input is collinear");
  int i3 = -1;
  best = 0.0;
  const Vec3 nu0 = d01.cross(pts[i2] - pts[i0]).normalized();
  for (int i = 0; i < n; ++i) {
    const double h = std::abs(nu0.dot(pts[i] - pts[i0]));
    if (h > best) best = h, i3 = i;
  }
  const double scale0 =
      1.0 + pts[i0].norm() + pts[i1].norm() + pts[i2].norm();
  if (i3 < 0 || best < 1e-12 * scale0) {
    throw DegenerateHull("input is (nearly) coplanar");
  }

  const Vec3 C0 = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
  std::vector<Face> faces;
  auto make_face = [&](int a, int b, int c) {
    Face f;
    f.v = {a, b, c};
    Vec3 nu = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
    const double nn = nu.norm();
    if (nn == 0.0) throw DegenerateHull("zero-area hull face");
    nu /= nn;
    if (nu.dot(pts[a] - C0) < 0.0) {
      std::swap(f.v[1], f.v[2]);
      nu = -nu;
    }
    f.nu = nu;
    f.off = nu.dot(pts[f.v[0]]);
    f.nb = {-1, -1, -1};
    return f;
  };
  faces.push_back(make_face(i0, i1, i2));
  faces.push_back(make_face(i0, i1, i3));
  faces.push_back(make_face(i0, i2, i3));
  faces.push_back(make_face(i1, i2, i3));
  // Stitch the initial tetrahedron's adjacency by shared-edge lookup.
  auto link_all = [&](std::vector<int> ids) {
    std::unordered_map<long long, std::pair<int, int>> half;
    for (int id : ids) {
      for (int e = 0; e < 3; ++e) {
        const int a = faces[id].v[e], b = faces[id].v[(e + 1) % 3];
        const long long key =
            static_cast<long long>(std::min(a, b)) * (n + 1) + std::max(a, b);
        auto it = half.find(key);
        if (it == half.end()) {
          half[key] = {id, e};
        } else {
          faces[id].nb[e] = it->second.first;
          faces[it->second.first].nb[it->second.second] = id;
        }
      }
    }
  };
  link_all({0, 1, 2, 3});

  // Conflict assignment: each point goes with the face it is farthest above.
  std::vector<int> work;
  auto assign_point = [&](int p, const std::vector<int>& cand) {
    int bestf = -1;
    double bestd = 0.0;
    for (int id : cand) {
      if (!faces[id].alive) continue;
      const double d = signed_dist(faces[id], pts[p]);
      if (d > eps_for(faces[id], pts[p], eps_rel) && d > bestd) {
        bestd = d;
        bestf = id;
      }
    }
    if (bestf >= 0) faces[bestf].outside.push_back(p);
  };
  {
    const std::vector<int> init = {0, 1, 2, 3};
    for (int p = 0; p < n; ++p) {
      if (p == i0 || p == i1 || p == i2 || p == i3) continue;
      assign_point(p, init);
    }
  }
  for (int id = 0; id < 4; ++id) {
    if (!faces[id].outside.empty()) work.push_back(id);
  }

  std::vector<int> visible, stack_;
  std::vector<int> mark(faces.size(), 0);
  int visit_gen = 0;
  while (!work.empty()) {
    const int fid = work.back();
    work.pop_back();
    if (!faces[fid].alive || faces[fid].outside.empty()) continue;
    // Apex: farthest conflict point of this face.
    int apex = -1;
    double bestd = -1.0;
    for (int p : faces[fid].outside) {
      const double d = signed_dist(faces[fid], pts[p]);
      if (d > bestd) bestd = d, apex = p;
    }
    // Visible region via adjacency search.
    visible.clear();
    stack_.clear();
    mark.resize(faces.size(), 0);
    ++visit_gen;
    stack_.push_back(fid);
    mark[fid] = visit_gen;
    while (!stack_.empty()) {
      const int g = stack_.back();
      stack_.pop_back();
      visible.push_back(g);
      for (int e = 0; e < 3; ++e) {
        const int h = faces[g].nb[e];
        if (h < 0 || mark[h] == visit_gen || !faces[h].alive) continue;
        const double d = signed_dist(faces[h], pts[apex]);
        if (d > eps_for(faces[h], pts[apex], eps_rel)) {
          mark[h] = visit_gen;
          stack_.push_back(h);
        }
      }
    }
    // Horizon: directed edges of visible faces bordering invisible ones.
    std::unordered_map<int, std::pair<int, int>> horizon;  // u -> (v, outer)
    for (int g : visible) {
      for (int e = 0; e < 3; ++e) {
        const int h = faces[g].nb[e];
        if (h >= 0 && mark[h] == visit_gen) continue;
        const int u = faces[g].v[e], v = faces[g].v[(e + 1) % 3];
        if (horizon.count(u)) {
          throw DegenerateHull("horizon is not a simple cycle");
        }
        horizon[u] = {v, h};
      }
    }
    if (horizon.empty()) {
      // The apex sees no boundary: numerically inside after all; drop it.
      faces[fid].outside.erase(
          std::remove(faces[fid].outside.begin(), faces[fid].outside.end(),
                      apex),
          faces[fid].outside.end());
      if (!faces[fid].outside.empty()) work.push_back(fid);
      continue;
    }
    // Collect displaced conflict points, kill visible faces.
    std::vector<int> orphans;
    for (int g : visible) {
      for (int p : faces[g].outside) {
        if (p != apex) orphans.push_back(p);
      }
      faces[g].outside.clear();
      faces[g].alive = false;
    }
    // Walk the horizon cycle and build the new cone of faces.
    std::vector<int> new_ids;
    const int start = horizon.begin()->first;
    int u = start;
    size_t steps = 0;
    do {
      const auto it = horizon.find(u);
      if (it == horizon.end() || ++steps > horizon.size()) {
        throw DegenerateHull("horizon walk failed to close");
      }
      const auto [v, outer] = it->second;
      Face f;
      f.v = {u, v, apex};
      Vec3 nu = (pts[v] - pts[u]).cross(pts[apex] - pts[u]);
      const double nn = nu.norm();
      if (nn == 0.0) throw DegenerateHull("zero-area horizon face");
      nu /= nn;
      if (nu.dot(pts[u] - C0) < 0.0) nu = -nu;
      f.nu = nu;
      f.off = nu.dot(pts[u]);
      f.nb = {outer, -1, -1};
      const int id = static_cast<int>(faces.size());
      // Fix the outer face's neighbor pointer for edge (v, u).
      if (outer >= 0) {
        for (int e = 0; e < 3; ++e) {
          if (faces[outer].v[e] == v && faces[outer].v[(e + 1) % 3] == u) {
            faces[outer].nb[e] = id;
          }
        }
      }
      faces.push_back(std::move(f));
      new_ids.push_back(id);
      u = v;
    } while (u != start);
    mark.resize(faces.size(), 0);
    // Link consecutive cone faces: edge (v, apex) of one is (apex, u) of the
    // next.
    const int m = static_cast<int>(new_ids.size());
    for (int j = 0; j < m; ++j) {
      faces[new_ids[j]].nb[1] = new_ids[(j + 1) % m];
      faces[new_ids[j]].nb[2] = new_ids[(j + m - 1) % m];
    }
    // Re-home the orphaned conflict points.
    std::sort(orphans.begin(), orphans.end());
    orphans.erase(std::unique(orphans.begin(), orphans.end()), orphans.end());
    for (int p : orphans) assign_point(p, new_ids);
    for (int id : new_ids) {
      if (!faces[id].outside.empty()) work.push_back(id);
    }
  }

  Hull3 out;
  out.interior = C0;
  for (const Face& f : faces) {
    if (f.alive) out.triangles.push_back(f.v);
  }
  for (const auto& tri : out.triangles) {
    out.vertex_ids.insert(out.vertex_ids.end(), tri.begin(), tri.end());
  }
  std::sort(out.vertex_ids.begin(), out.vertex_ids.end());
  out.vertex_ids.erase(std::unique(out.vertex_ids.begin(), out.vertex_ids.end()),
                       out.vertex_ids.end());
  return out;
}

double hull_support_violation(const std::vector<Vec3>& pts, const Hull3& hull) {
  double worst = 0.0;
  for (const auto& tri : hull.triangles) {
    const Vec3& a = pts[tri[0]];
    Vec3 nu = (pts[tri[1]] - a).cross(pts[tri[2]] - a);
    const double nn = nu.norm();
    if (nn == 0.0) continue;
    nu /= nn;
    if (nu.dot(a - hull.interior) < 0.0) nu = -nu;
    const double off = nu.dot(a);
    const double scale = 1.0 + std::abs(off);
    for (const Vec3& p : pts) {
      worst = std::max(worst, (nu.dot(p) - off) / scale);
    }
  }
  return worst;
}

}  // namespace adslab
