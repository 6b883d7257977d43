#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sphdesign/cycles.hpp"
#include "sphdesign/linalg.hpp"

namespace sphd {

/// Exponent vectors of all monomials in nvars variables of total degree <= max_deg,
/// ordered by degree, then lexicographically. Deterministic.
std::vector<std::vector<int>> monomials_up_to(int nvars, int max_deg);

/// Normalized moment of x^alpha over the unit sphere in R^nvars: zero when any
/// exponent is odd, otherwise prod (a_i - 1)!! / prod_{k<sum a_i/2} (nvars + 2k).
double sphere_moment(const std::vector<int>& exponents);

/// Gauss-Legendre nodes/weights on [-1, 1], cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// Path integral of f along a unit-speed geodesic arc. Starts at deg_hint + 10
/// nodes (32 when no hint) and accepts once doubling the node count moves the
/// value by < 1e-13; two failed doublings raise QuadratureNotConverged.
double arc_integral(const GeodesicArc& arc, const std::function<double(const Vec&)>& f,
                    int deg_hint = -1, bool normalized = false);

/// Evaluation sites with weights; the certification kernels run over these.
struct WeightedSites {
  int nvars = 0;
  std::vector<Vec> pos;
  std::vector<double> w;
};

/// Quadrature sites along the curve, exact for polynomials restricted to the
/// curve up to max_degree (with ample headroom). Weights sum to the length.
WeightedSites curve_sites(const Curve& c, int max_degree);

/// Length-normalized path integral over a closed curve.
double cycle_average(const Curve& c, const std::function<double(const Vec&)>& f,
                     int deg_hint = -1);

double point_average(const std::vector<Vec>& pts, const std::function<double(const Vec&)>& f);

enum class SweepMode {
  Parallel,         // power tables, OpenMP over monomials
  Serial,           // power tables, single thread (same arithmetic as Parallel)
  ReferenceSerial,  // plain std::pow evaluation, kept as the reference path
};

/// residual[i] = | sum_k w_k * mono_i(site_k)  -  sphere_moment(mono_i) |.
/// Site order is fixed, so results are reproducible under any thread count.
std::vector<double> moment_residuals(const WeightedSites& sites,
                                     const std::vector<std::vector<int>>& monomials,
                                     SweepMode mode = SweepMode::Parallel);

struct CertReport {
  int claimed_t = 0;
  double tol = 0.0;
  std::vector<double> residuals_by_degree;  // degrees 0..claimed_t+1 (full sweep)
  bool certified = false;
  int first_failing_degree = -1;  // -1: none up to claimed_t+1
  std::string mode = "full-sweep";
};

/// Moment-residual sweep over all monomials of degree 0..t+1 for the measure
/// beta * (point average) + (1-beta) * (normalized path integral).
/// Certified iff every degree <= t stays below tol; degree t+1 is informational.
CertReport certify_design(const Curve* curve, const std::vector<Vec>* points, double beta, int t,
                          double tol = 1e-10, SweepMode mode = SweepMode::Parallel);

/// Weighted multi-orbit point cubature: sum_i weight_i * mean over orbit_i.
CertReport weighted_point_cubature(const std::vector<std::pair<std::vector<Vec>, double>>& orbits,
                                   int t, double tol = 1e-10,
                                   SweepMode mode = SweepMode::Parallel);

/// Sites of a hybrid design, weights pre-scaled so plain sums approximate the
/// sphere integral.
WeightedSites design_sites(const Curve* curve, const std::vector<Vec>* points, double beta,
                           int max_degree);

}  // namespace sphd
