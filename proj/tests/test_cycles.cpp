#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "sphdesign/cycles.hpp"
#include "sphdesign/error.hpp"
#include "sphdesign/polytope.hpp"

using namespace sphd;

namespace {

constexpr double kPi = 3.14159265358979323846;

int locate(const Polytope& p, const Vec& x) {
  for (std::size_t k = 0; k < p.vertices.size(); ++k)
    if (max_abs_diff(p.vertices[k], x) < 1e-9) return static_cast<int>(k);
  return -1;
}

std::map<std::pair<int, int>, int> traversal_counts(const Polytope& p, const GeodesicCycle& c) {
  std::map<std::pair<int, int>, int> counts;
  for (const GeodesicArc& arc : c.arcs) {
    int i = locate(p, arc.a);
    int j = locate(p, arc.b);
    REQUIRE(i >= 0);
    REQUIRE(j >= 0);
    if (i > j) std::swap(i, j);
    ++counts[{i, j}];
  }
  return counts;
}

double hausdorff_vs_cycle(const GeodesicCycle& a, const GeodesicCycle& b) {
  double worst = 0.0;
  for (const GeodesicArc& arc : a.arcs) {
    for (int i = 0; i <= 64; ++i) {
      const Vec x = arc.point_at(arc.length * i / 64);
      double best = 1e300;
      for (const GeodesicArc& other : b.arcs) best = std::min(best, point_to_arc_distance(x, other));
      worst = std::max(worst, best);
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("arc basics") {
  const GeodesicArc arc(Vec{1, 0, 0}, Vec{0, 1, 0});
  CHECK(arc.length == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(std::abs(norm(arc.point_at(0.3)) - 1.0) < 1e-14);
  CHECK(max_abs_diff(arc.point_at(arc.length), arc.b) < 1e-14);
  CHECK_THROWS_AS(GeodesicArc(Vec{1, 0, 0}, Vec{-1, 0, 0}), Error);
  CHECK_THROWS_AS(GeodesicArc(Vec{1, 0, 0}, Vec{1, 0, 0}), Error);
}

TEST_CASE("Euler cycle covers each edge exactly once when degrees are even") {
  const Polytope oct = build_polytope("octahedron");
  const GeodesicCycle c = euler_cycle(oct);
  CHECK(c.arcs.size() == 12);
  CHECK(c.total_length == doctest::Approx(6.0 * kPi).epsilon(1e-14));
  for (const auto& [e, n] : traversal_counts(oct, c)) CHECK(n == 1);
  CHECK(traversal_counts(oct, c).size() == oct.edges.size());
}

TEST_CASE("odd degrees force doubling: each edge traversed exactly twice") {
  const Polytope cube = build_polytope("cube");
  CHECK_THROWS_AS(euler_cycle(cube, /*allow_doubling=*/false), Error);
  const GeodesicCycle c = euler_cycle(cube);
  CHECK(c.arcs.size() == 24);
  CHECK(c.total_length == doctest::Approx(24.0 * std::acos(1.0 / 3.0)).epsilon(1e-14));
  for (const auto& [e, n] : traversal_counts(cube, c)) CHECK(n == 2);
}

TEST_CASE("cycle lengths match the closed forms") {
  for (const char* name : {"icosidodecahedron", "icosahedron", "rhombic-triacontahedron"}) {
    const Polytope p = build_polytope(name);
    const GeodesicCycle c = euler_cycle(p);
    CHECK(std::abs(c.total_length - p.spec.cycle_length) < 1e-10);
  }
}

TEST_CASE("great-circle arrangements reproduce the projected polytope edges") {
  struct Case {
    const char* points;
    const char* trace;
    double length;
  };
  const Case cases[] = {
      {"octahedron", "octahedron", 6.0 * kPi},
      {"cube", "cuboctahedron", 8.0 * kPi},
      {"icosahedron", "icosidodecahedron", 12.0 * kPi},
  };
  for (const Case& cs : cases) {
    const GeodesicCycle arrangement = great_circle_cycle(build_polytope(cs.points).vertices);
    CHECK(arrangement.total_length == doctest::Approx(cs.length).epsilon(1e-13));
    const GeodesicCycle reference = euler_cycle(build_polytope(cs.trace));
    CHECK(hausdorff_vs_cycle(arrangement, reference) < 1e-9);
    CHECK(hausdorff_vs_cycle(reference, arrangement) < 1e-9);
  }
}

TEST_CASE("degenerate arrangements are rejected") {
  // Coincident circles: the same antipodal pair twice.
  std::vector<Vec> twice = {{0, 0, 1}, {0, 0, -1}, {0, 0, 1}, {0, 0, -1}};
  CHECK_THROWS_AS(great_circle_cycle(twice), Error);
  // Not closed under negation.
  std::vector<Vec> lopsided = {{0, 0, 1}, {1, 0, 0}};
  CHECK_THROWS_AS(great_circle_cycle(lopsided), Error);
}

TEST_CASE("latitude circles") {
  const ParametricCurve eq = circle_curve(0.0);
  CHECK(eq.length == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  const ParametricCurve c13 = circle_curve(1.0 / 3.0);
  CHECK(c13.length == doctest::Approx(2.0 * kPi * std::sqrt(8.0 / 9.0)).epsilon(1e-15));
  CHECK(std::abs(norm(c13.position(1.234)) - 1.0) < 1e-14);
  CHECK(c13.position(0.0)[2] == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(circle_curve(1.0), Error);
}

TEST_CASE("geodesic triangle at height cos(a)") {
  // At a = pi/2 the triangle degenerates to an equator traversal.
  const GeodesicCycle eq = triangle_curve(kPi / 2);
  CHECK(eq.arcs.size() == 3);
  for (const GeodesicArc& arc : eq.arcs)
    CHECK(arc.length == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(eq.total_length == doctest::Approx(2.0 * kPi).epsilon(1e-14));

  const double a = 1.0;
  const GeodesicCycle tri = triangle_curve(a);
  const double expected = std::acos(0.25 + 0.75 * std::cos(2.0 * a));
  for (const GeodesicArc& arc : tri.arcs)
    CHECK(arc.length == doctest::Approx(expected).epsilon(1e-14));

  CHECK(triangle_curve(0.01).total_length < 0.1);
}

TEST_CASE("point-to-arc distance") {
  const GeodesicArc arc(Vec{1, 0, 0}, Vec{0, 1, 0});
  CHECK(point_to_arc_distance(Vec{0, 0, 1}, arc) == doctest::Approx(kPi / 2).epsilon(1e-13));
  const Vec mid = arc.point_at(arc.length / 2);
  CHECK(point_to_arc_distance(mid, arc) < 1e-13);
  // Beyond the b endpoint: closest point is b itself.
  const Vec q = normalized(Vec{-0.1, 1, 0.0});
  CHECK(point_to_arc_distance(q, arc) == doctest::Approx(std::acos(dot(q, arc.b))).epsilon(1e-12));
}
