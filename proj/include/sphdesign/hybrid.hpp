#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sphdesign/cycles.hpp"
#include "sphdesign/invariants.hpp"
#include "sphdesign/quad.hpp"

namespace sphd {

/// A balanced pair (closed curve, point set) with its certification report.
struct HybridDesign {
  std::string provenance;
  Curve curve;
  std::vector<Vec> points;
  double beta = 0.0;
  int claimed_t = 0;
  CertReport cert;
};

/// beta = (-A) / (p(x0) - A) with A the normalized integral of p over arc0.
/// Throws DegenerateBalance when the denominator is below 1e-14.
double balance_single(const MultiPoly& p_inv, const Vec& x0, const GeodesicArc& arc0);

/// Orbit-weighted measures: mu0 = sum (|orbit_i|/|X|) delta_{x_i},
/// mu1 = sum (|orbit_j| len_j / total) nu_{arc_j}.
struct MultiOrbitSpec {
  struct PointOrbit {
    Vec seed;
    long orbit_size = 0;
  };
  struct ArcOrbit {
    GeodesicArc arc;
    long orbit_size = 0;
  };
  std::vector<PointOrbit> point_orbits;
  std::vector<ArcOrbit> arc_orbits;
};

/// beta = (-I1) / (I0 - I1) with I0 = int p dmu0, I1 = int p dmu1; handles the
/// zero cases (I1 = 0 -> beta 0, I0 = 0 -> beta 1) and throws IncompatibleSigns
/// when both integrals are nonzero with the same sign.
double balance_multi(const MultiOrbitSpec& spec, const MultiPoly& p_inv);

enum class CertifyMode { Auto, Full, Fast };

/// Assembles a registered primal/dual pair: Euler cycle of the primal, vertex
/// orbit(s) of the dual, the balancing factor, and a certification run.
/// Fast mode checks only the residual of the distinguished invariant.
HybridDesign build_hybrid(const std::string& primal, const std::string& dual,
                          CertifyMode mode = CertifyMode::Auto, double tol = 1e-10);

/// Registered (primal, dual, strength) triples, parametric entries materialized
/// for d = 3..6.
std::vector<std::tuple<std::string, std::string, int>> hybrid_pairs();

/// Closed-form balancing factors for the d-octahedron/d-cube dual pair:
/// {oct over cube, cube over oct}.
std::pair<double, double> beta_formulas_d(int d);

/// Closed-form beta(a) balancing the south pole against the geodesic triangle
/// at height cos(a).
double triangle_balance(double a);

/// Height parameter where the triangle hybrid integrates degree 2 exactly,
/// found by bisection. Throws RootNotBracketed if the defect never changes sign.
double solve_triangle_height();

/// The three elementary hybrids: latitude circle + south pole (t=2, beta=1/4),
/// triangle + south pole (t=2), equator + both poles (t=3, beta=1/3).
std::vector<HybridDesign> elementary_hybrids(double tol = 1e-10);

/// Point cloud representing the design support (>= 64 samples per arc).
std::vector<Vec> design_support(const Curve* curve, const std::vector<Vec>* points,
                                int samples_per_arc = 64);

/// Maximin estimate of the covering radius of a point cloud on the sphere,
/// using n_test quasi-uniform test directions.
double covering_radius(const std::vector<Vec>& support, int n_test, std::uint64_t seed = 1);

}  // namespace sphd
