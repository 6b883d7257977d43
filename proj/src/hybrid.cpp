#include "sphdesign/hybrid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "sphdesign/error.hpp"
#include "sphdesign/orthogroup.hpp"
#include "sphdesign/polytope.hpp"

namespace sphd {

namespace {
constexpr double kPhi = 1.6180339887498948482;
constexpr double kPi = 3.14159265358979323846;

Vec unit(std::initializer_list<double> v) { return normalized(Vec(v)); }
}  // namespace

double balance_single(const MultiPoly& p_inv, const Vec& x0, const GeodesicArc& arc0) {
  const double arc_avg = arc_integral(arc0, p_inv.as_fn(), p_inv.degree(), /*normalized=*/true);
  const double at_x0 = p_inv.eval(x0);
  const double den = at_x0 - arc_avg;
  if (std::abs(den) < 1e-14)
    fail("DegenerateBalance", "p(x0) equals the normalized arc integral; x0 sits on the "
                              "wrong stratum");
  return -arc_avg / den;
}

double balance_multi(const MultiOrbitSpec& spec, const MultiPoly& p_inv) {
  double pts_total = 0.0;
  for (const auto& o : spec.point_orbits) pts_total += static_cast<double>(o.orbit_size);
  double i0 = 0.0;
  for (const auto& o : spec.point_orbits)
    i0 += static_cast<double>(o.orbit_size) / pts_total * p_inv.eval(o.seed);

  double len_total = 0.0;
  for (const auto& o : spec.arc_orbits)
    len_total += static_cast<double>(o.orbit_size) * o.arc.length;
  double i1 = 0.0;
  for (const auto& o : spec.arc_orbits) {
    const double w = static_cast<double>(o.orbit_size) * o.arc.length / len_total;
    i1 += w * arc_integral(o.arc, p_inv.as_fn(), p_inv.degree(), /*normalized=*/true);
  }

  if (std::abs(i1) < 1e-14) return 0.0;
  if (std::abs(i0) < 1e-14) return 1.0;
  if ((i0 > 0.0) == (i1 > 0.0))
    fail("IncompatibleSigns", "both orbit integrals of the invariant have the same sign");
  return -i1 / (i0 - i1);
}

namespace {

struct HybridRecipe {
  std::string primal, dual;
  int strength = 0;
  std::string inv_group;  // invariant_poly label
  int inv_d = 0;
  Vec x0;                 // single-orbit balancing point (empty for multi)
  Vec arc_a, arc_b;
  bool multi = false;     // balance through orbit-weighted measures
};

std::vector<HybridRecipe> base_recipes() {
  std::vector<HybridRecipe> r;
  const double s5 = std::sqrt(5.0);

  r.push_back({"tetrahedron", "tetrahedron-dual", 3, "A3", 0, unit({1, 1, -1}),
               unit({1, 1, 1}), unit({1, -1, -1}), false});
  r.push_back({"octahedron", "cube", 5, "B3", 0, unit({1, 1, 1}), unit({1, 0, 0}),
               unit({0, 1, 0}), false});
  r.push_back({"cube", "octahedron", 5, "B3", 0, unit({1, 0, 0}), unit({-1, 1, 1}),
               unit({1, 1, 1}), false});
  r.push_back({"rhombic-dodecahedron", "cuboctahedron", 5, "B3", 0, unit({1, 1, 0}),
               unit({1, 1, 1}), unit({1, 0, 0}), false});
  r.push_back({"dodecahedron", "icosahedron", 9, "H3", 0, unit({kPhi, 1, 0}), unit({1, 1, 1}),
               unit({0, 1.0 / kPhi, kPhi}), false});
  r.push_back({"icosahedron", "dodecahedron", 9, "H3", 0, unit({1, 1, 1}), unit({kPhi, 1, 0}),
               unit({kPhi, -1, 0}), false});
  r.push_back({"rhombic-triacontahedron", "icosidodecahedron", 9, "H3", 0, unit({1, 0, 0}),
               unit({kPhi, 1, 0}), unit({1, 1, 1}), false});

  r.push_back({"600-cell", "120-cell", 19, "H4", 0, unit({0, 0, 1, 1}), {1, 0, 0, 0},
               {kPhi / 2, 0.5, 0.5 / kPhi, 0}, false});
  r.push_back({"24-cell", "24-cell-dual", 7, "F4", 0, {1, 0, 0, 0}, unit({1, 1, 0, 0}),
               unit({1, 0, 1, 0}), false});
  r.push_back({"4-tetrahedron", "4-tetrahedron-dual", 3, "A4", 0, unit({0, 0, -1, 1}),
               unit({0, 0, 1, -1}),
               {0, -s5 / (2 * std::sqrt(2.0)), (kPhi - 1) / (2 * std::sqrt(2.0)),
                kPhi / (2 * std::sqrt(2.0))},
               false});

  // Non-dual pairings balanced through orbit-weighted measures.
  r.push_back({"cuboctahedron", "rhombic-dodecahedron", 5, "B3", 0, {}, unit({1, 1, 0}),
               unit({1, 0, -1}), true});
  r.push_back({"cuboctahedron", "octahedron", 5, "B3", 0, {}, unit({1, 1, 0}),
               unit({1, 0, -1}), true});
  r.push_back({"icosidodecahedron", "rhombic-triacontahedron", 9, "H3", 0, {}, unit({1, 0, 0}),
               {kPhi / 2, 0.5 / kPhi, 0.5}, true});
  r.push_back({"icosidodecahedron", "icosahedron", 9, "H3", 0, {}, unit({1, 0, 0}),
               {kPhi / 2, 0.5 / kPhi, 0.5}, true});

  for (int d = 3; d <= 6; ++d) {
    const std::string oct = d == 3 ? "octahedron" : std::to_string(d) + "-octahedron";
    const std::string cube = d == 3 ? "cube" : std::to_string(d) + "-cube";
    if (d == 3) continue;  // R^3 pair already registered
    Vec ones(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)));
    Vec e1(static_cast<std::size_t>(d), 0.0), e2(static_cast<std::size_t>(d), 0.0);
    e1[0] = 1.0;
    e2[1] = 1.0;
    Vec flip = ones;
    flip[0] = -flip[0];
    r.push_back({oct, cube, 5, "Bd", d, ones, e1, e2, false});
    r.push_back({cube, oct, 5, "Bd", d, e1, flip, ones, false});
  }
  return r;
}

const HybridRecipe& find_recipe(const std::string& primal, const std::string& dual) {
  static const std::vector<HybridRecipe> recipes = base_recipes();
  for (const auto& r : recipes)
    if (r.primal == primal && r.dual == dual) return r;
  fail("UnknownPair", "no registered hybrid pair " + primal + "/" + dual);
}

}  // namespace

std::vector<std::tuple<std::string, std::string, int>> hybrid_pairs() {
  std::vector<std::tuple<std::string, std::string, int>> out;
  for (const auto& r : base_recipes()) out.emplace_back(r.primal, r.dual, r.strength);
  return out;
}

HybridDesign build_hybrid(const std::string& primal, const std::string& dual, CertifyMode mode,
                          double tol) {
  const HybridRecipe& rec = find_recipe(primal, dual);
  const Polytope prim = build_polytope(primal);
  const Polytope du = build_polytope(dual);
  const MultiPoly p_inv = invariant_poly(rec.inv_group, rec.inv_d);
  const GeodesicArc arc0(rec.arc_a, rec.arc_b);

  double beta = 0.0;
  if (rec.multi) {
    MultiOrbitSpec spec;
    for (std::size_t s = 0; s < du.spec.seeds.size(); ++s) {
      long count = 0;
      for (int o : du.vertex_orbit)
        if (o == static_cast<int>(s)) ++count;
      spec.point_orbits.push_back({du.spec.seeds[s], count});
    }
    spec.arc_orbits.push_back({arc0, static_cast<long>(prim.edges.size())});
    beta = balance_multi(spec, p_inv);
  } else {
    beta = balance_single(p_inv, rec.x0, arc0);
  }

  HybridDesign h;
  h.provenance = primal + "/" + dual;
  h.curve = euler_cycle(prim);
  h.points = du.vertices;
  h.beta = beta;
  h.claimed_t = rec.strength;

  const bool full = mode == CertifyMode::Full || (mode == CertifyMode::Auto && rec.strength < 19);
  if (full) {
    h.cert = certify_design(&h.curve, &h.points, beta, rec.strength, tol);
  } else {
    // Invariant-space shortcut: with the invariant spanned by {1, p_inv}, the
    // single residual of p_inv decides exactness on the whole space.
    const WeightedSites sites = design_sites(&h.curve, &h.points, beta, p_inv.degree());
    double acc = 0.0;
    for (std::size_t k = 0; k < sites.pos.size(); ++k) acc += sites.w[k] * p_inv.eval(sites.pos[k]);
    CertReport rpt;
    rpt.claimed_t = rec.strength;
    rpt.tol = tol;
    rpt.mode = "invariant-fast";
    rpt.residuals_by_degree = {std::abs(acc)};
    rpt.certified = std::abs(acc) < tol;
    rpt.first_failing_degree = rpt.certified ? -1 : p_inv.degree();
    h.cert = rpt;
  }
  return h;
}

std::pair<double, double> beta_formulas_d(int d) {
  const double dd = d;
  const double oct_cube = 3.0 * dd * (dd - 2.0) / (3.0 * dd * dd + 2.0 * dd - 8.0);
  const double theta = std::acos((dd - 2.0) / dd);
  const double root = std::sqrt(dd - 1.0);
  const double cube_oct = 3.0 * (dd - 2.0) / (dd + 2.0) *
                          (2.0 * (dd + 2.0) * root - dd * (dd - 4.0) * theta) /
                          (6.0 * (dd - 2.0) * root + dd * (5.0 * dd - 8.0) * theta);
  return {oct_cube, cube_oct};
}

double triangle_balance(double a) {
  const double c2a = std::cos(2.0 * a);
  const double arc = std::acos(0.25 + 0.75 * c2a);
  return 1.0 / (1.0 + std::sqrt(5.0 + 3.0 * c2a) / (std::sqrt(6.0) * std::sin(2.0 * a)) * arc);
}

namespace {

// Residuals of the x^2 and z^2 moments for the triangle-plus-south-pole pair.
double triangle_defect(double a) {
  const GeodesicCycle tri = triangle_curve(a);
  const Curve c = tri;
  const double beta = triangle_balance(a);
  const double ix2 =
      cycle_average(c, [](const Vec& x) { return x[0] * x[0]; }, 2);
  const double iz2 =
      cycle_average(c, [](const Vec& x) { return x[2] * x[2]; }, 2);
  const double e1 = (1.0 - beta) * ix2;          // x^2 vanishes at the pole
  const double e3 = beta + (1.0 - beta) * iz2;   // z^2 is 1 at the pole
  return e1 - e3;
}

}  // namespace

double solve_triangle_height() {
  double lo = 1e-3, hi = kPi / 2.0 - 1e-3;
  double flo = triangle_defect(lo), fhi = triangle_defect(hi);
  if ((flo > 0.0) == (fhi > 0.0))
    fail("RootNotBracketed", "degree-2 defect does not change sign on (0, pi/2)");
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = triangle_defect(mid);
    if (std::abs(fm) < 1e-12 || hi - lo < 1e-15) return mid;
    if ((fm > 0.0) == (fhi > 0.0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<HybridDesign> elementary_hybrids(double tol) {
  std::vector<HybridDesign> out;

  {
    HybridDesign h;
    h.provenance = "circle(1/3)+south-pole";
    h.curve = circle_curve(1.0 / 3.0);
    h.points = {Vec{0, 0, -1}};
    h.beta = 0.25;  // r/(1+r) at r = 1/3
    h.claimed_t = 2;
    h.cert = certify_design(&h.curve, &h.points, h.beta, h.claimed_t, tol);
    out.push_back(std::move(h));
  }
  {
    const double a_hat = solve_triangle_height();
    HybridDesign h;
    h.provenance = "triangle+south-pole";
    h.curve = triangle_curve(a_hat);
    h.points = {Vec{0, 0, -1}};
    h.beta = triangle_balance(a_hat);
    h.claimed_t = 2;
    h.cert = certify_design(&h.curve, &h.points, h.beta, h.claimed_t, tol);
    out.push_back(std::move(h));
  }
  {
    HybridDesign h;
    h.provenance = "equator+poles";
    h.curve = circle_curve(0.0);
    h.points = {Vec{0, 0, 1}, Vec{0, 0, -1}};
    h.beta = 1.0 / 3.0;
    h.claimed_t = 3;
    h.cert = certify_design(&h.curve, &h.points, h.beta, h.claimed_t, tol);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<Vec> design_support(const Curve* curve, const std::vector<Vec>* points,
                                int samples_per_arc) {
  std::vector<Vec> support;
  if (curve) support = sample_curve(*curve, std::max(64, samples_per_arc));
  if (points) support.insert(support.end(), points->begin(), points->end());
  return support;
}

namespace {

std::vector<Vec> test_directions_s2(int n, std::uint64_t seed) {
  // Fibonacci lattice; the seed rotates the longitudes.
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  const double offset = static_cast<double>(seed % 360) / 360.0 * 2.0 * kPi;
  std::vector<Vec> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i + offset;
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

std::vector<Vec> test_directions_s3(int n, std::uint64_t seed) {
  // Stratified in the polar angle (density sin^2), Fibonacci in the S^2 factor.
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  const double offset = static_cast<double>(seed % 360) / 360.0 * 2.0 * kPi;
  std::vector<Vec> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) / n;
    // Invert F(psi) = (psi - sin(psi)cos(psi))/pi by Newton.
    double psi = kPi * u;
    for (int it = 0; it < 50; ++it) {
      const double f = (psi - std::sin(psi) * std::cos(psi)) / kPi - u;
      const double df = 2.0 * std::sin(psi) * std::sin(psi) / kPi;
      if (df < 1e-14) break;
      const double step = f / df;
      psi -= step;
      if (std::abs(step) < 1e-14) break;
    }
    const double z = 1.0 - 2.0 * std::fmod(i * (std::sqrt(2.0) - 1.0) + 0.5 / n, 1.0);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * i + offset;
    const double sp = std::sin(psi);
    pts.push_back({std::cos(psi), sp * r * std::cos(phi), sp * r * std::sin(phi), sp * z});
  }
  return pts;
}

}  // namespace

double covering_radius(const std::vector<Vec>& support, int n_test, std::uint64_t seed) {
  if (support.empty()) fail("DegenerateBalance", "covering radius of an empty support");
  const int dim = static_cast<int>(support[0].size());
  const std::vector<Vec> tests =
      dim == 3 ? test_directions_s2(n_test, seed) : test_directions_s3(n_test, seed);

  double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(tests.size()); ++i) {
    double best = -1.0;  // max inner product = min distance
    for (const Vec& s : support) best = std::max(best, dot(tests[i], s));
    const double d = std::acos(std::clamp(best, -1.0, 1.0));
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace sphd
