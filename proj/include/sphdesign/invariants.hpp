#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sphdesign/linalg.hpp"
#include "sphdesign/orthogroup.hpp"

namespace sphd {

/// Sparse multivariate polynomial: exponent vector -> coefficient.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly monomial(const std::vector<int>& exps, double c = 1.0);
  static MultiPoly constant(int nvars, double c);

  int nvars() const { return nvars_; }
  int degree() const;
  const std::map<std::vector<int>, double>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, double c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(double s) const;

  double eval(const Vec& x) const;
  std::function<double(const Vec&)> as_fn() const;

  /// Termwise normalized sphere integral (exact moments).
  double sphere_integral() const;

 private:
  int nvars_ = 0;
  std::map<std::vector<int>, double> terms_;
};

/// Monomial symmetric polynomial: the sum of the distinct monomials x^mu over
/// permutations mu of lambda (padded with zeros to nvars).
MultiPoly monomial_symmetric(int nvars, std::vector<int> lambda);

/// prod_{i<j} (x_i^2 - x_j^2) in 4 variables.
MultiPoly delta4();

/// The distinguished zero-mean invariant polynomial of a group:
/// A3 -> xyz; B3/Bd -> sum x_i^4 - 3/(d+2); H3 -> degree-6 icosahedral invariant;
/// A4 -> degree 3; F4 -> degree 6; H4 -> degree 12 (with the +462*sqrt(5)*Delta4 sign).
MultiPoly invariant_poly(const std::string& group_label, int d = 0);

/// H4 degree-12 candidate with a chosen sign on the Delta4 part (+1 correct, -1 not).
MultiPoly h4_degree12_with_sign(double sign);

/// Gegenbauer C^(1)_l (Chebyshev second kind), normalized C^(1)_l(1) = l+1.
struct GegenbauerC1 {
  int degree = 0;
  std::vector<double> coeffs;  // ascending powers
  double operator()(double x) const;
};

GegenbauerC1 gegenbauer_c1(int l);

/// x -> (1/|G|) sum_g C^(1)_l(<a, g x>): a group-invariant degree-l harmonic.
/// Throws VanishingAverage when the average is numerically zero everywhere.
std::function<double(const Vec&)> averaged_gegenbauer(const FiniteOrthGroup& g, const Vec& a,
                                                      int l);

struct SignErrorReport {
  double plus_rel_dev = 0.0;   // deviation of the ratio (+462 sqrt5 Delta4)/average
  double minus_rel_dev = 0.0;  // same for the -462 sqrt5 Delta4 variant
  bool plus_is_proportional = false;
  bool minus_is_proportional = false;
};

/// Checks which sign of the Delta4 term makes the explicit H4 degree-12
/// polynomial proportional to the Gegenbauer group average.
SignErrorReport sign_error_check();

}  // namespace sphd
