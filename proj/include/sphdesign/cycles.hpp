#pragma once

#include <functional>
#include <utility>
#include <variant>
#include <vector>

#include "sphdesign/linalg.hpp"
#include "sphdesign/polytope.hpp"

namespace sphd {

/// Geodesic arc between non-antipodal unit points, parametrized at unit speed.
struct GeodesicArc {
  Vec a, b;
  double length = 0.0;

  GeodesicArc(Vec a_, Vec b_);
  Vec point_at(double s) const;  // s in [0, length]
  GeodesicArc reversed() const { return GeodesicArc(b, a); }
};

/// Closed chain of geodesic arcs: consecutive endpoints match and the chain
/// returns to its start.
struct GeodesicCycle {
  std::vector<GeodesicArc> arcs;
  double total_length = 0.0;

  explicit GeodesicCycle(std::vector<GeodesicArc> arcs_);
};

/// Closed constant-speed parametric curve (latitude circles).
struct ParametricCurve {
  std::function<Vec(double)> position;  // parameter in [0, period)
  double period = 0.0;
  double speed = 0.0;  // |gamma'|, constant
  double length = 0.0;
  int dim = 0;
};

using Curve = std::variant<ParametricCurve, GeodesicCycle>;

double curve_length(const Curve& c);
int curve_dim(const Curve& c);

/// Closed trail through every edge exactly once. Edges may repeat as parallel
/// copies (multigraph). Returns edge ids in traversal order and fills the
/// closed vertex path. Lowest edge id wins ties, so the result is reproducible.
std::vector<int> euler_trail(int nverts, const std::vector<std::pair<int, int>>& edges,
                             std::vector<int>* vertex_path);

/// Euler cycle over the projected edge graph. With odd vertex degrees the edge
/// set is doubled first (each edge traversed exactly twice); without
/// allow_doubling that case throws OddDegreeWithoutDoubling.
GeodesicCycle euler_cycle(const Polytope& p, bool allow_doubling = true);

/// Example construction on S^2: great circles polar to an antipodal point set,
/// cut into arcs at their pairwise intersections, traversed as an Euler cycle.
GeodesicCycle great_circle_cycle(const std::vector<Vec>& antipodal_points);

/// Latitude circle at height r (not a geodesic for r != 0).
ParametricCurve circle_curve(double height);

/// Geodesic triangle through three points at height cos(a) around the north pole.
GeodesicCycle triangle_curve(double a);

double point_to_arc_distance(const Vec& x, const GeodesicArc& arc);

/// Points along the curve, samples_per_arc per arc (parametric curves get a
/// dense uniform sampling of at least 256 points).
std::vector<Vec> sample_curve(const Curve& c, int samples_per_arc);

}  // namespace sphd
