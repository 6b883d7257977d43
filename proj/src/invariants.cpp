#include "sphdesign/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sphdesign/error.hpp"
#include "sphdesign/quad.hpp"

namespace sphd {

namespace {
constexpr double kPhi = 1.6180339887498948482;
constexpr double kCoeffPrune = 1e-13;  // true coefficients here are all >= ~0.05
}  // namespace

MultiPoly MultiPoly::monomial(const std::vector<int>& exps, double c) {
  MultiPoly p(static_cast<int>(exps.size()));
  p.add_term(exps, c);
  return p;
}

MultiPoly MultiPoly::constant(int nvars, double c) {
  MultiPoly p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add_term(const std::vector<int>& exps, double c) {
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    if (std::abs(c) > kCoeffPrune) terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (std::abs(it->second) <= kCoeffPrune) terms_.erase(it);
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(nvars_);
  std::vector<int> e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int v = 0; v < nvars_; ++v) e[v] = e1[v] + e2[v];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator*(double s) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

double MultiPoly::eval(const Vec& x) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (int v = 0; v < nvars_; ++v) {
      for (int k = 0; k < e[v]; ++k) t *= x[v];
    }
    acc += t;
  }
  return acc;
}

std::function<double(const Vec&)> MultiPoly::as_fn() const {
  return [p = *this](const Vec& x) { return p.eval(x); };
}

double MultiPoly::sphere_integral() const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) acc += c * sphere_moment(e);
  return acc;
}

MultiPoly monomial_symmetric(int nvars, std::vector<int> lambda) {
  lambda.resize(nvars, 0);
  std::sort(lambda.begin(), lambda.end());
  MultiPoly p(nvars);
  do {
    p.add_term(lambda, 1.0);
  } while (std::next_permutation(lambda.begin(), lambda.end()));
  return p;
}

MultiPoly delta4() {
  MultiPoly p = MultiPoly::constant(4, 1.0);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> ei(4, 0), ej(4, 0);
      ei[i] = 2;
      ej[j] = 2;
      p = p * (MultiPoly::monomial(ei, 1.0) - MultiPoly::monomial(ej, 1.0));
    }
  }
  return p;
}

MultiPoly h4_degree12_with_sign(double sign) {
  struct Term {
    std::vector<int> lambda;
    double c;
  };
  const std::vector<Term> terms = {
      {{12}, 1.0},          {{10, 2}, -22.0},      {{8, 4}, 99.0},
      {{8, 2, 2}, 198.0},   {{6, 6}, -176.0},      {{6, 4, 2}, -66.0},
      {{6, 2, 2, 2}, -4752.0}, {{4, 4, 4}, -330.0}, {{4, 4, 2, 2}, 3960.0},
  };
  MultiPoly p(4);
  for (const Term& t : terms) p = p + monomial_symmetric(4, t.lambda) * t.c;
  return p + delta4() * (sign * 462.0 * std::sqrt(5.0));
}

MultiPoly invariant_poly(const std::string& group_label, int d) {
  if (group_label == "A3") return MultiPoly::monomial({1, 1, 1});
  if (group_label == "B3") return invariant_poly("Bd", 3);
  if (group_label == "Bd" || (group_label.size() == 2 && group_label[0] == 'B' &&
                              std::isdigit(static_cast<unsigned char>(group_label[1])))) {
    const int dd = group_label == "Bd" ? d : group_label[1] - '0';
    if (dd < 3) fail("UnknownGroup", "Bd invariant needs d >= 3");
    MultiPoly p(dd);
    for (int i = 0; i < dd; ++i) {
      std::vector<int> e(dd, 0);
      e[i] = 4;
      p.add_term(e, 1.0);
    }
    p.add_term(std::vector<int>(dd, 0), -3.0 / (dd + 2));
    return p;
  }
  if (group_label == "H3") {
    const double p2 = kPhi * kPhi;
    auto factor = [p2](int hi, int lo) {
      std::vector<int> e1(3, 0), e2(3, 0);
      e1[hi] = 2;
      e2[lo] = 2;
      return MultiPoly::monomial(e1, p2) - MultiPoly::monomial(e2, 1.0);
    };
    MultiPoly p0 = factor(0, 1) * factor(1, 2) * factor(2, 0);
    return p0 + MultiPoly::constant(3, (2.0 + std::sqrt(5.0)) / 21.0);
  }
  if (group_label == "A4") {
    MultiPoly p(4);
    p.add_term({2, 0, 1, 0}, kPhi);
    p.add_term({0, 2, 0, 1}, -kPhi);
    p.add_term({0, 2, 1, 0}, 1.0 - kPhi);
    p.add_term({2, 0, 0, 1}, -(1.0 - kPhi));
    p.add_term({0, 0, 2, 1}, 1.0);
    p.add_term({0, 0, 1, 2}, -1.0);
    return p;
  }
  if (group_label == "F4") {
    MultiPoly p(4);
    for (int i = 0; i < 4; ++i) {
      std::vector<int> e6(4, 0), e4(4, 0);
      e6[i] = 6;
      e4[i] = 4;
      p.add_term(e6, 16.0);
      p.add_term(e4, -20.0);
    }
    p.add_term({0, 0, 0, 0}, 5.0);
    return p;
  }
  if (group_label == "H4") return h4_degree12_with_sign(+1.0);
  fail("UnknownGroup", "no invariant polynomial for '" + group_label + "'");
}

double GegenbauerC1::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

GegenbauerC1 gegenbauer_c1(int l) {
  // Chebyshev U recurrence: U_0 = 1, U_1 = 2x, U_{n+1} = 2x U_n - U_{n-1}.
  std::vector<double> u0 = {1.0};
  if (l == 0) return {0, u0};
  std::vector<double> u1 = {0.0, 2.0};
  for (int n = 1; n < l; ++n) {
    std::vector<double> u2(n + 2, 0.0);
    for (std::size_t k = 0; k < u1.size(); ++k) u2[k + 1] += 2.0 * u1[k];
    for (std::size_t k = 0; k < u0.size(); ++k) u2[k] -= u0[k];
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  return {l, u1};
}

std::function<double(const Vec&)> averaged_gegenbauer(const FiniteOrthGroup& g, const Vec& a,
                                                      int l) {
  if (g.dim != 4) fail("VanishingAverage", "Gegenbauer averaging is set up on S^3");
  const GegenbauerC1 c1 = gegenbauer_c1(l);
  // Precompute g^T a so each evaluation is one dot product per element:
  // <a, g x> = <g^T a, x>.
  std::vector<Vec> ga;
  ga.reserve(g.elements.size());
  for (const Mat& m : g.elements) ga.push_back(mat_apply(transpose(m), a));
  const double inv_order = 1.0 / static_cast<double>(g.elements.size());
  auto fn = [ga = std::move(ga), c1, inv_order](const Vec& x) {
    double acc = 0.0;
    for (const Vec& v : ga) acc += c1(dot(v, x));
    return acc * inv_order;
  };

  std::mt19937_64 rng(20240505ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  bool nonzero = false;
  for (int trial = 0; trial < 32 && !nonzero; ++trial) {
    Vec x(4);
    for (double& xi : x) xi = gauss(rng);
    x = normalized(x);
    if (std::abs(fn(x)) >= 1e-12) nonzero = true;
  }
  if (!nonzero)
    fail("VanishingAverage", "group average of C^(1)_" + std::to_string(l) +
                                 " vanishes at 32 random points; bad seed direction or degree");
  return fn;
}

SignErrorReport sign_error_check() {
  const FiniteOrthGroup& h4 = named_group("H4");
  const Vec e1 = {1.0, 0.0, 0.0, 0.0};
  const auto avg = averaged_gegenbauer(h4, e1, 12);
  const MultiPoly plus = h4_degree12_with_sign(+1.0);
  const MultiPoly minus = h4_degree12_with_sign(-1.0);

  std::mt19937_64 rng(987654321ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto rel_dev = [&](const MultiPoly& p) {
    double ref = 0.0;
    double dev = 0.0;
    int used = 0;
    while (used < 100) {
      Vec x(4);
      for (double& xi : x) xi = gauss(rng);
      x = normalized(x);
      const double px = p.eval(x);
      if (std::abs(px) < 1e-6) continue;
      const double ratio = avg(x) / px;
      if (used == 0)
        ref = ratio;
      else
        dev = std::max(dev, std::abs(ratio - ref) / std::abs(ref));
      ++used;
    }
    return dev;
  };

  SignErrorReport r;
  r.plus_rel_dev = rel_dev(plus);
  r.minus_rel_dev = rel_dev(minus);
  r.plus_is_proportional = r.plus_rel_dev < 1e-8;
  r.minus_is_proportional = r.minus_rel_dev < 1e-3;
  return r;
}

}  // namespace sphd
