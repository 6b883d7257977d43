#include <doctest.h>

#include <cmath>
#include <random>

#include "sphdesign/cycles.hpp"
#include "sphdesign/error.hpp"
#include "sphdesign/hybrid.hpp"
#include "sphdesign/invariants.hpp"
#include "sphdesign/polytope.hpp"
#include "sphdesign/quad.hpp"

using namespace sphd;

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec unit(std::initializer_list<double> v) { return normalized(Vec(v)); }

// Monte-Carlo oracle for a sphere moment (independent of the closed form).
double mc_moment(const std::vector<int>& exps, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double acc = 0.0;
  Vec x(exps.size());
  for (std::size_t s = 0; s < samples; ++s) {
    for (double& xi : x) xi = gauss(rng);
    x = normalized(x);
    double t = 1.0;
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (int k = 0; k < exps[v]; ++k) t *= x[v];
    acc += t;
  }
  return acc / static_cast<double>(samples);
}

}  // namespace

TEST_CASE("sphere moments: quoted values") {
  CHECK(sphere_moment({2, 0, 0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(sphere_moment({1, 1, 0}) == 0.0);
  CHECK(sphere_moment({4, 0, 0}) == doctest::Approx(1.0 / 5.0).epsilon(1e-15));
  // Frozen from the Monte-Carlo oracle below: x^4 on the sphere in R^4 is 1/8.
  CHECK(sphere_moment({4, 0, 0, 0}) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("sphere moments: Monte-Carlo oracle at 1e7 samples") {
  const double mc = mc_moment({4, 0, 0, 0}, 10'000'000, 123456789ull);
  CHECK(std::abs(mc - 0.125) < 1e-3);
  CHECK(std::abs(mc - sphere_moment({4, 0, 0, 0})) < 1e-3);
}

TEST_CASE("sphere moments: odd exponents vanish, pure squares sum to one") {
  std::mt19937_64 rng(5);
  for (int n = 3; n <= 6; ++n) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 2;
      total += sphere_moment(e);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-14));

    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> e(n);
      int odd_at = static_cast<int>(rng() % n);
      for (int i = 0; i < n; ++i) e[i] = static_cast<int>(rng() % 4) * 2;
      e[odd_at] += 1;
      CHECK(sphere_moment(e) == 0.0);
    }
  }
}

TEST_CASE("monomial enumeration sizes") {
  CHECK(monomials_up_to(4, 19).size() == 8855);
  CHECK(monomials_up_to(3, 2).size() == 10);
}

TEST_CASE("Gauss-Legendre sanity") {
  const auto& [x, w] = gauss_legendre(2);
  double acc = 0.0;
  for (int i = 0; i < 2; ++i) acc += w[i] * x[i] * x[i];
  CHECK(acc == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("arc integral of 1 is the arc length, direction independent") {
  const GeodesicArc arc(unit({1, 0, 0}), unit({0.2, 0.9, -0.1}));
  const auto one = [](const Vec&) { return 1.0; };
  CHECK(arc_integral(arc, one, 0) == doctest::Approx(arc.length).epsilon(1e-14));

  const MultiPoly p = invariant_poly("H3");
  const double forward = arc_integral(arc, p.as_fn(), p.degree());
  const double backward = arc_integral(arc.reversed(), p.as_fn(), p.degree());
  CHECK(std::abs(forward - backward) < 1e-12);
}

TEST_CASE("normalized arc integral of the degree-4 invariant over an octahedron edge") {
  const GeodesicArc arc(Vec{1, 0, 0}, Vec{0, 1, 0});
  const MultiPoly p = invariant_poly("B3");
  CHECK(arc_integral(arc, p.as_fn(), 4, /*normalized=*/true) ==
        doctest::Approx(3.0 / 20.0).epsilon(1e-13));
}

TEST_CASE("quadrature gate rejects a discontinuous integrand") {
  // The jump sits away from the arc midpoint so symmetric node layouts cannot
  // cancel the error.
  const GeodesicArc arc(unit({-1, 1, 1}), unit({1, 1, 1}));
  const auto step = [](const Vec& x) { return x[0] > 0.1234 ? 1.0 : 0.0; };
  CHECK_THROWS_AS(arc_integral(arc, step), Error);
}

TEST_CASE("cycle averages") {
  // Latitude circles: average of z is the height; z^2 at height 1/3 gives 1/9.
  const Curve c03 = circle_curve(0.3);
  CHECK(cycle_average(c03, [](const Vec& x) { return x[2]; }, 1) ==
        doctest::Approx(0.3).epsilon(1e-13));
  const Curve c13 = circle_curve(1.0 / 3.0);
  CHECK(cycle_average(c13, [](const Vec& x) { return x[2] * x[2]; }, 2) ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-13));

  // Edge transitivity: the cycle average equals the single-arc average.
  const Polytope oct = build_polytope("octahedron");
  const Curve oct_cycle = euler_cycle(oct);
  const MultiPoly p4 = invariant_poly("B3");
  CHECK(cycle_average(oct_cycle, p4.as_fn(), 4) == doctest::Approx(3.0 / 20.0).epsilon(1e-12));

  const Curve cell24 = euler_cycle(build_polytope("24-cell"));
  const MultiPoly p6 = invariant_poly("F4");
  CHECK(cycle_average(cell24, p6.as_fn(), 6) == doctest::Approx(-5.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("point averages") {
  const MultiPoly p4 = invariant_poly("B3");
  const std::vector<Vec> cube = build_polytope("cube").vertices;
  CHECK(point_average(cube, p4.as_fn()) == doctest::Approx(-4.0 / 15.0).epsilon(1e-14));

  const MultiPoly p6 = invariant_poly("H3");
  const std::vector<Vec> icosido = build_polytope("icosidodecahedron").vertices;
  CHECK(point_average(icosido, p6.as_fn()) ==
        doctest::Approx((2.0 + std::sqrt(5.0)) / 21.0).epsilon(1e-13));

  CHECK(point_average(cube, [](const Vec&) { return 1.0; }) == doctest::Approx(1.0));
}

TEST_CASE("certify: octahedron cycle is a 3-design, tetrahedron cycle is not") {
  const Curve oct = euler_cycle(build_polytope("octahedron"));
  const CertReport r3 = certify_design(&oct, nullptr, 0.0, 3);
  CHECK(r3.certified);
  CHECK(r3.first_failing_degree == 4);  // strength is exactly 3

  const Curve tetra = euler_cycle(build_polytope("tetrahedron"));
  CHECK(certify_design(&tetra, nullptr, 0.0, 2).certified);
  const CertReport r = certify_design(&tetra, nullptr, 0.0, 3);
  CHECK_FALSE(r.certified);
  CHECK(r.first_failing_degree == 3);
}

TEST_CASE("certify: equator plus poles at beta = 1/3") {
  const Curve eq = circle_curve(0.0);
  const std::vector<Vec> poles = {Vec{0, 0, 1}, Vec{0, 0, -1}};
  const CertReport r = certify_design(&eq, &poles, 1.0 / 3.0, 3);
  CHECK(r.certified);
}

TEST_CASE("certify: a single point is not a 1-design") {
  const std::vector<Vec> pt = {Vec{1, 0, 0}};
  const CertReport r = certify_design(nullptr, &pt, 1.0, 1);
  CHECK_FALSE(r.certified);
  CHECK(r.first_failing_degree == 1);
}

TEST_CASE("weighted point cubature") {
  // The icosahedron vertex orbit alone is a 5-design.
  const std::vector<Vec> ico = build_polytope("icosahedron").vertices;
  CHECK(weighted_point_cubature({{ico, 1.0}}, 5).certified);
  CHECK_FALSE(weighted_point_cubature({{ico, 1.0}}, 6).certified);

  try {
    weighted_point_cubature({{ico, 0.7}}, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == "WeightsNotNormalized");
  }

  // A single point with full weight cannot integrate degree 1.
  const CertReport single = weighted_point_cubature({{{Vec{1, 0, 0}}, 1.0}}, 1);
  CHECK_FALSE(single.certified);
  CHECK(single.first_failing_degree == 1);
}

TEST_CASE("parallel, serial, and reference sweeps agree") {
  const Curve oct = euler_cycle(build_polytope("octahedron"));
  const std::vector<Vec> cube = build_polytope("cube").vertices;
  const WeightedSites sites = design_sites(&oct, &cube, 9.0 / 25.0, 6);
  const auto monos = monomials_up_to(3, 6);

  const auto par = moment_residuals(sites, monos, SweepMode::Parallel);
  const auto ser = moment_residuals(sites, monos, SweepMode::Serial);
  const auto ref = moment_residuals(sites, monos, SweepMode::ReferenceSerial);
  REQUIRE(par.size() == ser.size());
  REQUIRE(par.size() == ref.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i] == ser[i]);  // identical arithmetic, any thread count
    CHECK(std::abs(par[i] - ref[i]) < 1e-12);
  }
}

TEST_CASE("certificates are rotation invariant") {
  std::mt19937_64 rng(424242);
  std::normal_distribution<double> gauss;
  // Random orthogonal matrix by Gram-Schmidt on a Gaussian matrix.
  Mat q(3);
  std::vector<Vec> cols;
  for (int c = 0; c < 3; ++c) {
    Vec v(3);
    for (double& vi : v) vi = gauss(rng);
    for (const Vec& b : cols) v = sub(v, scale(b, dot(v, b)));
    cols.push_back(normalized(v));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q(i, j) = cols[j][i];

  const Polytope oct = build_polytope("octahedron");
  const std::vector<Vec> cube = build_polytope("cube").vertices;
  const GeodesicCycle cycle = euler_cycle(oct);

  std::vector<GeodesicArc> rot_arcs;
  for (const GeodesicArc& a : cycle.arcs)
    rot_arcs.emplace_back(mat_apply(q, a.a), mat_apply(q, a.b));
  const Curve rotated = GeodesicCycle(std::move(rot_arcs));
  std::vector<Vec> rot_cube;
  for (const Vec& v : cube) rot_cube.push_back(mat_apply(q, v));

  const Curve base = cycle;
  const CertReport r0 = certify_design(&base, &cube, 9.0 / 25.0, 5);
  const CertReport r1 = certify_design(&rotated, &rot_cube, 9.0 / 25.0, 5);
  CHECK(r0.certified);
  CHECK(r1.certified);
  REQUIRE(r0.residuals_by_degree.size() == r1.residuals_by_degree.size());
  for (int d = 0; d <= 5; ++d)
    CHECK(std::abs(r0.residuals_by_degree[d] - r1.residuals_by_degree[d]) < 1e-9);
}
