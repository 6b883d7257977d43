#include "sphdesign/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sphdesign/error.hpp"

namespace sphd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GeodesicArc::GeodesicArc(Vec a_, Vec b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.size() != b.size()) fail("DegenerateArc", "endpoint dimensions differ");
  double c = dot(a, b);
  c = std::clamp(c, -1.0, 1.0);
  if (1.0 - std::abs(c) < 1e-12)
    fail("DegenerateArc", "arc endpoints coincide or are antipodal");
  length = std::acos(c);
}

Vec GeodesicArc::point_at(double s) const {
  const double sl = std::sin(length);
  const double ca = std::sin(length - s) / sl;
  const double cb = std::sin(s) / sl;
  Vec p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = ca * a[i] + cb * b[i];
  return p;
}

GeodesicCycle::GeodesicCycle(std::vector<GeodesicArc> arcs_) : arcs(std::move(arcs_)) {
  if (arcs.empty()) fail("DegenerateArc", "empty cycle");
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const GeodesicArc& cur = arcs[k];
    const GeodesicArc& nxt = arcs[(k + 1) % arcs.size()];
    if (max_abs_diff(cur.b, nxt.a) > 1e-10)
      fail("DegenerateArc", "cycle arcs do not chain at arc " + std::to_string(k));
    total_length += cur.length;
  }
}

double curve_length(const Curve& c) {
  if (const auto* g = std::get_if<GeodesicCycle>(&c)) return g->total_length;
  return std::get<ParametricCurve>(c).length;
}

int curve_dim(const Curve& c) {
  if (const auto* g = std::get_if<GeodesicCycle>(&c)) return static_cast<int>(g->arcs[0].a.size());
  return std::get<ParametricCurve>(c).dim;
}

std::vector<int> euler_trail(int nverts, const std::vector<std::pair<int, int>>& edges,
                             std::vector<int>* vertex_path) {
  std::vector<std::vector<std::pair<int, int>>> adj(nverts);  // (edge id, other end)
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].emplace_back(static_cast<int>(e), edges[e].second);
    adj[edges[e].second].emplace_back(static_cast<int>(e), edges[e].first);
  }
  for (int v = 0; v < nverts; ++v)
    if (adj[v].size() % 2 != 0)
      fail("OddDegreeWithoutDoubling", "vertex " + std::to_string(v) + " has odd degree");

  std::vector<std::size_t> next(nverts, 0);
  std::vector<char> used(edges.size(), 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, edge that led here)
  stack.emplace_back(0, -1);
  std::vector<int> path_v, path_e;
  while (!stack.empty()) {
    auto [v, ein] = stack.back();
    while (next[v] < adj[v].size() && used[adj[v][next[v]].first]) ++next[v];
    if (next[v] == adj[v].size()) {
      path_v.push_back(v);
      if (ein >= 0) path_e.push_back(ein);
      stack.pop_back();
    } else {
      auto [eid, w] = adj[v][next[v]];
      used[eid] = 1;
      stack.emplace_back(w, eid);
    }
  }
  std::reverse(path_v.begin(), path_v.end());
  std::reverse(path_e.begin(), path_e.end());
  if (path_e.size() != edges.size())
    fail("DisconnectedEdgeGraph", "Euler trail covered " + std::to_string(path_e.size()) +
                                      " of " + std::to_string(edges.size()) + " edges");
  if (vertex_path) *vertex_path = std::move(path_v);
  return path_e;
}

GeodesicCycle euler_cycle(const Polytope& p, bool allow_doubling) {
  std::vector<std::pair<int, int>> edges = p.edges;
  if (!all_degrees_even(p)) {
    if (!allow_doubling)
      fail("OddDegreeWithoutDoubling", p.spec.name + " has odd vertex degrees");
    edges.insert(edges.end(), p.edges.begin(), p.edges.end());
  }
  std::vector<int> path;
  euler_trail(static_cast<int>(p.vertices.size()), edges, &path);
  std::vector<GeodesicArc> arcs;
  arcs.reserve(path.size() - 1);
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    arcs.emplace_back(p.vertices[path[k]], p.vertices[path[k + 1]]);
  return GeodesicCycle(std::move(arcs));
}

GeodesicCycle great_circle_cycle(const std::vector<Vec>& antipodal_points) {
  for (const Vec& v : antipodal_points)
    if (v.size() != 3) fail("DegenerateArrangement", "great-circle arrangements live on S^2");

  // Pick one pole per antipodal pair.
  std::vector<Vec> poles;
  std::vector<char> taken(antipodal_points.size(), 0);
  for (std::size_t i = 0; i < antipodal_points.size(); ++i) {
    if (taken[i]) continue;
    bool found = false;
    for (std::size_t j = i + 1; j < antipodal_points.size(); ++j) {
      if (!taken[j] && max_abs_diff(antipodal_points[j], scale(antipodal_points[i], -1.0)) < 1e-9) {
        taken[i] = taken[j] = 1;
        found = true;
        break;
      }
    }
    if (!found) fail("DegenerateArrangement", "point set is not closed under negation");
    poles.push_back(normalized(antipodal_points[i]));
  }
  const std::size_t n = poles.size();
  if (n < 2) fail("DegenerateArrangement", "need at least two circles");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (1.0 - std::abs(dot(poles[i], poles[j])) < 1e-9)
        fail("DegenerateArrangement", "two circles coincide");

  // Arrangement vertices: pairwise circle intersections.
  std::vector<Vec> verts;
  auto vertex_id = [&verts](const Vec& x) {
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (max_abs_diff(verts[k], x) < 1e-9) return static_cast<int>(k);
    verts.push_back(x);
    return static_cast<int>(verts.size() - 1);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec q = normalized(cross3(poles[i], poles[j]));
      vertex_id(q);
      vertex_id(scale(q, -1.0));
    }
  }
  for (const Vec& v : verts) {
    int circles_through = 0;
    for (const Vec& p : poles)
      if (std::abs(dot(v, p)) < 1e-9) ++circles_through;
    if (circles_through > 2)
      fail("DegenerateArrangement", "three circles meet at a point");
  }

  // Split each circle into arcs between consecutive intersection points.
  std::vector<std::pair<int, int>> edges;
  std::vector<GeodesicArc> geom;
  for (std::size_t i = 0; i < n; ++i) {
    Vec u(3, 0.0);
    u[std::abs(poles[i][0]) < 0.9 ? 0 : 1] = 1.0;
    u = normalized(sub(u, scale(poles[i], dot(u, poles[i]))));
    const Vec w = cross3(poles[i], u);
    std::vector<std::pair<double, int>> on_circle;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (std::abs(dot(verts[k], poles[i])) < 1e-9)
        on_circle.emplace_back(std::atan2(dot(verts[k], w), dot(verts[k], u)),
                               static_cast<int>(k));
    if (on_circle.size() < 3)
      fail("DegenerateArrangement", "a circle has fewer than three intersection points");
    std::sort(on_circle.begin(), on_circle.end());
    for (std::size_t k = 0; k < on_circle.size(); ++k) {
      const auto& [a0, v0] = on_circle[k];
      const auto& [a1, v1] = on_circle[(k + 1) % on_circle.size()];
      const double gap = std::fmod(a1 - a0 + 2.0 * kPi, 2.0 * kPi);
      if (gap > kPi - 1e-9)
        fail("DegenerateArrangement", "an arrangement arc spans half a circle or more");
      (void)gap;
      edges.emplace_back(v0, v1);
      geom.emplace_back(verts[v0], verts[v1]);
    }
  }

  std::vector<int> vpath;
  const std::vector<int> epath = euler_trail(static_cast<int>(verts.size()), edges, &vpath);
  std::vector<GeodesicArc> arcs;
  arcs.reserve(epath.size());
  for (std::size_t k = 0; k < epath.size(); ++k) {
    const GeodesicArc& g = geom[epath[k]];
    // Orient the stored arc to match the walk direction.
    arcs.push_back(max_abs_diff(g.a, verts[vpath[k]]) < 1e-9 ? g : g.reversed());
  }
  return GeodesicCycle(std::move(arcs));
}

ParametricCurve circle_curve(double height) {
  if (height < 0.0 || height >= 1.0)
    fail("DegenerateArc", "latitude circle height must be in [0, 1)");
  const double rho = std::sqrt(1.0 - height * height);
  ParametricCurve c;
  c.dim = 3;
  c.period = 2.0 * kPi;
  c.speed = rho;
  c.length = 2.0 * kPi * rho;
  c.position = [rho, height](double t) -> Vec {
    return {rho * std::cos(t), rho * std::sin(t), height};
  };
  return c;
}

GeodesicCycle triangle_curve(double a) {
  if (a <= 0.0 || a > kPi / 2.0 + 1e-15)
    fail("DegenerateArc", "triangle height parameter must be in (0, pi/2]");
  const double sa = std::sin(a), ca = std::cos(a);
  const Vec u1 = {sa, 0.0, ca};
  const Vec u2 = {-0.5 * sa, std::sqrt(3.0) / 2.0 * sa, ca};
  const Vec u3 = {-0.5 * sa, -std::sqrt(3.0) / 2.0 * sa, ca};
  std::vector<GeodesicArc> arcs;
  arcs.emplace_back(u1, u2);
  arcs.emplace_back(u2, u3);
  arcs.emplace_back(u3, u1);
  return GeodesicCycle(std::move(arcs));
}

double point_to_arc_distance(const Vec& x, const GeodesicArc& arc) {
  // Distance to the arc's great circle if the foot point lies on the arc,
  // otherwise to the nearer endpoint. Chord-based formulas keep full accuracy
  // for points on or near the arc, where acos would lose half the digits.
  auto point_dist = [&x](const Vec& y) {
    return 2.0 * std::asin(std::min(1.0, 0.5 * norm(sub(x, y))));
  };
  const double endpoint_min = std::min(point_dist(arc.a), point_dist(arc.b));

  // Orthonormal frame of the arc plane: a, and t = unit tangent at a toward b.
  Vec t = sub(arc.b, scale(arc.a, dot(arc.a, arc.b)));
  const double tn = norm(t);
  if (tn < 1e-14) return endpoint_min;
  t = scale(t, 1.0 / tn);
  const double xa = dot(x, arc.a);
  const double xt = dot(x, t);
  const double proj = std::hypot(xa, xt);
  if (proj < 1e-14) return kPi / 2.0;
  const double angle = std::atan2(xt, xa);  // foot point parameter along the circle
  if (angle >= 0.0 && angle <= arc.length) {
    // Residual orthogonal to the plane gives the circle distance accurately.
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= xa * arc.a[i] + xt * t[i];
    return std::min(endpoint_min, std::atan2(norm(r), proj));
  }
  return endpoint_min;
}

std::vector<Vec> sample_curve(const Curve& c, int samples_per_arc) {
  std::vector<Vec> out;
  if (const auto* g = std::get_if<GeodesicCycle>(&c)) {
    for (const GeodesicArc& arc : g->arcs)
      for (int i = 0; i < samples_per_arc; ++i)
        out.push_back(arc.point_at(arc.length * i / samples_per_arc));
  } else {
    const auto& pc = std::get<ParametricCurve>(c);
    const int n = std::max(256, samples_per_arc);
    for (int i = 0; i < n; ++i) out.push_back(pc.position(pc.period * i / n));
  }
  return out;
}

}  // namespace sphd
