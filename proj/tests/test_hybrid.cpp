#include <doctest.h>

#include <cmath>

#include "sphdesign/error.hpp"
#include "sphdesign/hybrid.hpp"
#include "sphdesign/polytope.hpp"

using namespace sphd;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPhi = 1.6180339887498948482;

Vec unit(std::initializer_list<double> v) { return normalized(Vec(v)); }

}  // namespace

TEST_CASE("single-orbit balancing factors match their closed forms") {
  const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
  const double c13 = std::acos(1.0 / 3.0);
  const double cm13 = std::acos(-1.0 / 3.0);
  const double cr3 = std::acos(1.0 / std::sqrt(3.0));
  const double cs53 = std::acos(s5 / 3.0);
  const double cr5 = std::acos(1.0 / s5);
  const double c_rt = std::acos(std::sqrt(1.0 / 3.0 + 2.0 / (3.0 * s5)));

  struct Row {
    const char* primal;
    const char* dual;
    double expected;
    double decimal;
  };
  const Row rows[] = {
      {"tetrahedron", "tetrahedron-dual", 4.0 / (4.0 + 3.0 * s2 * cm13), 0.33},
      {"octahedron", "cube", 9.0 / 25.0, 0.36},
      {"cube", "octahedron", (10.0 * s2 + 3.0 * c13) / (10.0 * s2 + 35.0 * c13), 0.31},
      {"rhombic-dodecahedron", "cuboctahedron",
       (10.0 - 3.0 * s2 * cr3) / (10.0 + 5.0 * s2 * cr3), 0.35},
      {"dodecahedron", "icosahedron",
       (1190.0 * s5 - 675.0 * cs53) / (1190.0 * s5 + 6237.0 * cs53), 0.30},
      {"icosahedron", "dodecahedron", (126.0 + 45.0 * cr5) / (126.0 + 301.0 * cr5), 0.38},
      {"rhombic-triacontahedron", "icosidodecahedron",
       (7.0 * (17.0 * s5 - 27.0) + 135.0 * c_rt) / (7.0 * (17.0 * s5 - 27.0) + 567.0 * c_rt),
       0.37},
  };
  for (const Row& r : rows) {
    const HybridDesign h = build_hybrid(r.primal, r.dual);
    CHECK(std::abs(h.beta - r.expected) < 1e-12);
    CHECK(std::abs(h.beta - r.decimal) < 5e-3);
    CHECK(h.cert.certified);
  }
}

TEST_CASE("multi-orbit balancing factors are the quoted rationals") {
  CHECK(std::abs(build_hybrid("cuboctahedron", "rhombic-dodecahedron").beta - 21.0 / 25.0) <
        1e-12);
  CHECK(std::abs(build_hybrid("cuboctahedron", "octahedron").beta - 1.0 / 5.0) < 1e-12);
  CHECK(std::abs(build_hybrid("icosidodecahedron", "rhombic-triacontahedron").beta -
                 45.0 / 49.0) < 1e-12);
  CHECK(std::abs(build_hybrid("icosidodecahedron", "icosahedron").beta - 5.0 / 21.0) < 1e-12);
}

TEST_CASE("multi-orbit balance reduces to the single-orbit formula") {
  const MultiPoly p = invariant_poly("B3");
  const Vec x_cube = unit({1, 1, 1});
  const GeodesicArc oct_edge(Vec{1, 0, 0}, Vec{0, 1, 0});
  const double single = balance_single(p, x_cube, oct_edge);
  MultiOrbitSpec spec;
  spec.point_orbits.push_back({x_cube, 8});
  spec.arc_orbits.push_back({oct_edge, 12});
  CHECK(std::abs(balance_multi(spec, p) - single) < 1e-14);
}

TEST_CASE("balancing factors are scale independent") {
  const MultiPoly p = invariant_poly("B3");
  const MultiPoly q = p * (-7.25);
  const Vec x_cube = unit({1, 1, 1});
  const GeodesicArc oct_edge(Vec{1, 0, 0}, Vec{0, 1, 0});
  CHECK(std::abs(balance_single(p, x_cube, oct_edge) - balance_single(q, x_cube, oct_edge)) <
        1e-14);
  MultiOrbitSpec spec;
  spec.point_orbits.push_back({x_cube, 8});
  spec.arc_orbits.push_back({oct_edge, 12});
  CHECK(std::abs(balance_multi(spec, p) - balance_multi(spec, q)) < 1e-14);
}

TEST_CASE("degenerate balancing point is rejected") {
  // The degree-4 invariant is constant on cuboctahedron edges and equals its
  // value at the cuboctahedron vertices, so the denominator vanishes there.
  const MultiPoly p = invariant_poly("B3");
  const GeodesicArc cubocta_edge(unit({1, 1, 0}), unit({1, 0, -1}));
  try {
    balance_single(p, unit({1, 1, 0}), cubocta_edge);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "DegenerateBalance");
  }
}

TEST_CASE("incompatible signs are rejected") {
  const MultiPoly p = invariant_poly("B3");
  MultiOrbitSpec spec;
  spec.point_orbits.push_back({Vec{1, 0, 0}, 6});                       // p = 2/5 > 0
  spec.arc_orbits.push_back({GeodesicArc(Vec{1, 0, 0}, Vec{0, 1, 0}), 12});  // 3/20 > 0
  try {
    balance_multi(spec, p);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "IncompatibleSigns");
  }
}

TEST_CASE("4D hybrids: quoted balancing factors and certification") {
  const HybridDesign h24 = build_hybrid("24-cell", "24-cell-dual");
  CHECK(std::abs(h24.beta - 5.0 / 14.0) < 1e-12);
  CHECK(h24.claimed_t == 7);
  CHECK(h24.cert.certified);

  const double c = std::acos(-0.25);
  const double expected = 8.0 * std::sqrt(15.0) / (8.0 * std::sqrt(15.0) + 27.0 * c);
  const HybridDesign h5 = build_hybrid("4-tetrahedron", "4-tetrahedron-dual");
  CHECK(std::abs(h5.beta - expected) < 1e-12);
  CHECK(std::abs(h5.beta - 0.39) < 5e-3);
  CHECK(h5.claimed_t == 3);
  CHECK(h5.cert.certified);
}

TEST_CASE("the strength-19 pair: exact rational balance and fast certification") {
  const HybridDesign h = build_hybrid("600-cell", "120-cell");  // Auto -> invariant-fast
  CHECK(std::abs(h.beta - 176.0 / 301.0) < 1e-12);
  CHECK(h.claimed_t == 19);
  CHECK(h.cert.mode == "invariant-fast");
  CHECK(h.cert.certified);
  CHECK(h.points.size() == 600);
  CHECK(std::get<GeodesicCycle>(h.curve).arcs.size() == 720);
}

TEST_CASE("closed-form d-dimensional balancing factors") {
  const auto [oc4, co4] = beta_formulas_d(4);
  CHECK(oc4 == doctest::Approx(0.5).epsilon(1e-15));
  const double s3 = std::sqrt(3.0);
  CHECK(co4 == doctest::Approx(3.0 * s3 / (3.0 * s3 + 4.0 * kPi)).epsilon(1e-14));

  CHECK(beta_formulas_d(3).first == doctest::Approx(9.0 / 25.0).epsilon(1e-15));
  CHECK(beta_formulas_d(2).first == doctest::Approx(0.0));

  // Consistency with the assembled hybrids for d = 3..6.
  for (int d = 3; d <= 6; ++d) {
    const std::string oct = d == 3 ? "octahedron" : std::to_string(d) + "-octahedron";
    const std::string cube = d == 3 ? "cube" : std::to_string(d) + "-cube";
    const auto [oct_cube, cube_oct] = beta_formulas_d(d);
    CHECK(std::abs(build_hybrid(oct, cube, CertifyMode::Fast).beta - oct_cube) < 1e-10);
    CHECK(std::abs(build_hybrid(cube, oct, CertifyMode::Fast).beta - cube_oct) < 1e-10);
  }
}

TEST_CASE("unknown hybrid pair") {
  try {
    build_hybrid("cube", "icosahedron");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "UnknownPair");
  }
}

TEST_CASE("every registered hybrid pair certifies at its claimed strength") {
  for (const auto& [primal, dual, s] : hybrid_pairs()) {
    const HybridDesign h = build_hybrid(primal, dual);  // Auto mode
    CHECK(h.claimed_t == s);
    CHECK(h.cert.certified);
    if (h.cert.mode == "full-sweep") {
      for (int d = 0; d <= s; ++d) CHECK(h.cert.residuals_by_degree[d] < 1e-9);
    }
  }
}

TEST_CASE("elementary hybrids") {
  const auto designs = elementary_hybrids();
  REQUIRE(designs.size() == 3);

  CHECK(designs[0].beta == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(designs[0].claimed_t == 2);
  CHECK(designs[0].cert.certified);

  const double a_hat = solve_triangle_height();
  CHECK(std::abs(a_hat - 1.359) < 2e-3);
  CHECK(std::abs(designs[1].beta - 0.249) < 2e-3);
  CHECK(designs[1].claimed_t == 2);
  CHECK(designs[1].cert.certified);

  CHECK(designs[2].beta == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(designs[2].claimed_t == 3);
  CHECK(designs[2].cert.certified);
}

TEST_CASE("triangle balance matches the path-integral derivation") {
  // beta(a) = m/(1+m) with m the normalized integral of z over the triangle.
  for (double a : {0.6, 1.0, 1.359}) {
    const Curve tri = triangle_curve(a);
    const double m = cycle_average(tri, [](const Vec& x) { return x[2]; }, 1);
    CHECK(std::abs(triangle_balance(a) - m / (1.0 + m)) < 1e-12);
  }
}

TEST_CASE("covering radius estimates") {
  // A single point: the farthest test direction is its antipode.
  const std::vector<Vec> one_point = {Vec{0, 0, 1}};
  CHECK(std::abs(covering_radius(one_point, 100000) - kPi) < 2e-2);

  // A dense quasi-uniform cloud covers the sphere.
  std::vector<Vec> dense;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < 4096; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / 4096;
    const double r = std::sqrt(1.0 - z * z);
    dense.push_back({r * std::cos(golden * i + 0.4), r * std::sin(golden * i + 0.4), z});
  }
  CHECK(covering_radius(dense, 20000) < 0.1);

  // Dual vertices fill the voids of the octahedron cycle.
  const Curve oct = euler_cycle(build_polytope("octahedron"));
  const std::vector<Vec> cube = build_polytope("cube").vertices;
  const double with_points = covering_radius(design_support(&oct, &cube), 50000);
  const double without = covering_radius(design_support(&oct, nullptr), 50000);
  CHECK(with_points < without);
}
