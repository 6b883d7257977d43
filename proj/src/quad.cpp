#include "sphdesign/quad.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "sphdesign/error.hpp"

namespace sphd {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::vector<std::vector<int>> monomials_up_to(int nvars, int max_deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars - 1) {
      cur[var] = remaining;
      out.push_back(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {  // lexicographically decreasing first var? keep e desc
      cur[var] = e;
      rec(var + 1, remaining - e);
    }
  };
  for (int deg = 0; deg <= max_deg; ++deg) rec(0, deg);
  return out;
}

double sphere_moment(const std::vector<int>& exponents) {
  const int n = static_cast<int>(exponents.size());
  int half_sum = 0;
  for (int e : exponents) {
    if (e % 2 != 0) return 0.0;
    half_sum += e / 2;
  }
  double value = 1.0;
  int k = 0;  // interleave numerator/denominator factors to stay in range
  for (int e : exponents) {
    for (int j = 1; j <= e / 2; ++j) {
      value *= static_cast<double>(2 * j - 1);
      value /= static_cast<double>(n + 2 * k);
      ++k;
    }
  }
  (void)half_sum;
  return value;
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double p0, p1, dp;
    for (int iter = 0; iter < 100; ++iter) {
      p0 = 1.0;
      p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  // Newton starting points above enumerate roots from the right.
  std::vector<std::pair<double, double>> xw(n);
  for (int i = 0; i < n; ++i) xw[i] = {x[i], w[i]};
  std::sort(xw.begin(), xw.end());
  for (int i = 0; i < n; ++i) {
    x[i] = xw[i].first;
    w[i] = xw[i].second;
  }
  auto [pos, ok] = cache.emplace(n, std::make_pair(std::move(x), std::move(w)));
  (void)ok;
  return pos->second;
}

namespace {

double arc_integral_fixed(const GeodesicArc& arc, const std::function<double(const Vec&)>& f,
                          int n) {
  const auto& [x, w] = gauss_legendre(n);
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double s = 0.5 * (x[k] + 1.0) * arc.length;
    acc += w[k] * f(arc.point_at(s));
  }
  return acc * 0.5 * arc.length;
}

}  // namespace

double arc_integral(const GeodesicArc& arc, const std::function<double(const Vec&)>& f,
                    int deg_hint, bool normalized) {
  int n = deg_hint >= 0 ? deg_hint + 10 : 32;
  double prev = arc_integral_fixed(arc, f, n);
  for (int attempt = 0; attempt < 2; ++attempt) {
    n *= 2;
    const double cur = arc_integral_fixed(arc, f, n);
    if (std::abs(cur - prev) < 1e-13)
      return normalized ? cur / arc.length : cur;
    prev = cur;
  }
  fail("QuadratureNotConverged",
       "node doubling still moved the arc integral by >= 1e-13 at " + std::to_string(n) +
           " nodes");
}

WeightedSites curve_sites(const Curve& c, int max_degree) {
  WeightedSites s;
  s.nvars = curve_dim(c);
  if (const auto* cyc = std::get_if<GeodesicCycle>(&c)) {
    const int n = max_degree + 12;
    const auto& [x, w] = gauss_legendre(n);
    for (const GeodesicArc& arc : cyc->arcs) {
      for (int k = 0; k < n; ++k) {
        s.pos.push_back(arc.point_at(0.5 * (x[k] + 1.0) * arc.length));
        s.w.push_back(w[k] * 0.5 * arc.length);
      }
    }
  } else {
    // Closed constant-speed curve: the uniform rule is exact for trigonometric
    // polynomials of degree < n.
    const auto& pc = std::get<ParametricCurve>(c);
    const int n = std::max(64, 8 * (max_degree + 1));
    for (int i = 0; i < n; ++i) {
      s.pos.push_back(pc.position(pc.period * i / n));
      s.w.push_back(pc.length / n);
    }
  }
  return s;
}

double cycle_average(const Curve& c, const std::function<double(const Vec&)>& f, int deg_hint) {
  if (const auto* cyc = std::get_if<GeodesicCycle>(&c)) {
    double acc = 0.0;
    for (const GeodesicArc& arc : cyc->arcs) acc += arc_integral(arc, f, deg_hint);
    return acc / cyc->total_length;
  }
  const auto& pc = std::get<ParametricCurve>(c);
  int n = deg_hint >= 0 ? std::max(64, 8 * (deg_hint + 1)) : 64;
  auto avg = [&pc, &f](int m) {
    double acc = 0.0;
    for (int i = 0; i < m; ++i) acc += f(pc.position(pc.period * i / m));
    return acc / m;
  };
  double prev = avg(n);
  for (int attempt = 0; attempt < 2; ++attempt) {
    n *= 2;
    const double cur = avg(n);
    if (std::abs(cur - prev) < 1e-13) return cur;
    prev = cur;
  }
  fail("QuadratureNotConverged", "uniform rule on closed curve did not settle");
}

double point_average(const std::vector<Vec>& pts, const std::function<double(const Vec&)>& f) {
  double acc = 0.0;
  for (const Vec& p : pts) acc += f(p);
  return acc / static_cast<double>(pts.size());
}

namespace {

/// site-major power tables: pw[site][var][e] = pos[site][var]^e, e <= max_deg.
std::vector<double> power_tables(const WeightedSites& s, int max_deg) {
  const std::size_t nv = static_cast<std::size_t>(s.nvars);
  const std::size_t stride = nv * (max_deg + 1);
  std::vector<double> pw(s.pos.size() * stride);
  for (std::size_t k = 0; k < s.pos.size(); ++k) {
    for (std::size_t v = 0; v < nv; ++v) {
      double* row = &pw[k * stride + v * (max_deg + 1)];
      row[0] = 1.0;
      for (int e = 1; e <= max_deg; ++e) row[e] = row[e - 1] * s.pos[k][v];
    }
  }
  return pw;
}

}  // namespace

std::vector<double> moment_residuals(const WeightedSites& sites,
                                     const std::vector<std::vector<int>>& monomials,
                                     SweepMode mode) {
  const std::size_t m = monomials.size();
  std::vector<double> res(m);

  if (mode == SweepMode::ReferenceSerial) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto& e = monomials[i];
      double acc = 0.0;
      for (std::size_t k = 0; k < sites.pos.size(); ++k) {
        double term = sites.w[k];
        for (int v = 0; v < sites.nvars; ++v)
          term *= std::pow(sites.pos[k][v], e[v]);
        acc += term;
      }
      res[i] = std::abs(acc - sphere_moment(e));
    }
    return res;
  }

  int max_deg = 0;
  for (const auto& e : monomials) {
    int d = 0;
    for (int v : e) d += v;
    max_deg = std::max(max_deg, d);
  }
  const std::vector<double> pw = power_tables(sites, max_deg);
  const std::size_t nsites = sites.pos.size();
  const std::size_t stride = static_cast<std::size_t>(sites.nvars) * (max_deg + 1);
  const int nv = sites.nvars;
  const bool parallel = (mode == SweepMode::Parallel);

#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    const int* e = monomials[i].data();
    double acc = 0.0;
    for (std::size_t k = 0; k < nsites; ++k) {
      const double* row = &pw[k * stride];
      double term = sites.w[k];
      for (int v = 0; v < nv; ++v) term *= row[v * (max_deg + 1) + e[v]];
      acc += term;
    }
    res[i] = std::abs(acc - sphere_moment(monomials[i]));
  }
  return res;
}

WeightedSites design_sites(const Curve* curve, const std::vector<Vec>* points, double beta,
                           int max_degree) {
  WeightedSites s;
  if (curve) {
    s = curve_sites(*curve, max_degree);
    const double f = (points ? 1.0 - beta : 1.0) / curve_length(*curve);
    for (double& w : s.w) w *= f;
  }
  if (points && !points->empty()) {
    s.nvars = static_cast<int>((*points)[0].size());
    const double f = (curve ? beta : 1.0) / static_cast<double>(points->size());
    for (const Vec& p : *points) {
      s.pos.push_back(p);
      s.w.push_back(f);
    }
  }
  return s;
}

namespace {

CertReport reduce_report(const std::vector<std::vector<int>>& monos,
                         const std::vector<double>& res, int t, double tol) {
  CertReport r;
  r.claimed_t = t;
  r.tol = tol;
  r.residuals_by_degree.assign(static_cast<std::size_t>(t) + 2, 0.0);
  for (std::size_t i = 0; i < monos.size(); ++i) {
    int d = 0;
    for (int v : monos[i]) d += v;
    r.residuals_by_degree[d] = std::max(r.residuals_by_degree[d], res[i]);
  }
  r.certified = true;
  for (int d = 0; d <= t + 1; ++d) {
    if (r.residuals_by_degree[d] >= tol) {
      if (r.first_failing_degree < 0) r.first_failing_degree = d;
      if (d <= t) r.certified = false;
    }
  }
  return r;
}

}  // namespace

CertReport certify_design(const Curve* curve, const std::vector<Vec>* points, double beta, int t,
                          double tol, SweepMode mode) {
  if (!curve && !points) fail("DegenerateBalance", "certify_design needs a curve or points");
  if (beta < 0.0 || beta > 1.0)
    fail("DegenerateBalance", "balancing factor outside [0, 1]");
  const WeightedSites sites = design_sites(curve, points, beta, t + 1);
  const auto monos = monomials_up_to(sites.nvars, t + 1);
  const auto res = moment_residuals(sites, monos, mode);
  return reduce_report(monos, res, t, tol);
}

CertReport weighted_point_cubature(const std::vector<std::pair<std::vector<Vec>, double>>& orbits,
                                   int t, double tol, SweepMode mode) {
  if (orbits.empty()) fail("WeightsNotNormalized", "no orbits given");
  double wsum = 0.0;
  for (const auto& [pts, w] : orbits) wsum += w;
  if (std::abs(wsum - 1.0) > 1e-12)
    fail("WeightsNotNormalized", "orbit weights sum to " + std::to_string(wsum));
  WeightedSites sites;
  sites.nvars = static_cast<int>(orbits[0].first[0].size());
  for (const auto& [pts, w] : orbits) {
    const double f = w / static_cast<double>(pts.size());
    for (const Vec& p : pts) {
      sites.pos.push_back(p);
      sites.w.push_back(f);
    }
  }
  const auto monos = monomials_up_to(sites.nvars, t + 1);
  const auto res = moment_residuals(sites, monos, mode);
  return reduce_report(monos, res, t, tol);
}

}  // namespace sphd
