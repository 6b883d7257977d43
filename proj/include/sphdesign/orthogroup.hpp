#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sphdesign/linalg.hpp"

namespace sphd {

/// A finite subgroup of the orthogonal group, stored as an explicit element list.
struct FiniteOrthGroup {
  std::string name;
  int dim = 0;
  int homogeneity_t = 0;  // largest t with every orbit a t-design
  std::vector<Mat> elements;

  long order() const { return static_cast<long>(elements.size()); }
};

struct GenerateOptions {
  double dedup_tol = 1e-9;
  std::size_t element_cap = 100000;  // used when expected_order == 0
  long expected_order = 0;           // > 0 enables the 10x cap and the order check
  std::string name;
  int homogeneity_t = 0;
};

/// Closure of the reflections I - (2/|v|^2) v v^T under products (breadth-first).
/// Throws ClosureOverflow if the closure exceeds the cap, and GroupOrderMismatch
/// if a labelled group comes out with the wrong order.
FiniteOrthGroup generate_group(const std::vector<Vec>& roots, const GenerateOptions& opt = {});

/// Memoized named groups: A3, A5, A6 (simplex symmetries), B2..B6 (signed
/// permutations), D4..D6 (even sign changes), H3, A4, F4, H4.
const FiniteOrthGroup& named_group(const std::string& label);

/// Unit roots of the 600-cell; reflections in these generate H4.
std::vector<Vec> h4_roots();

/// {g x : g in G}, deduplicated at tol. Deterministic order (first seen).
std::vector<Vec> orbit(const FiniteOrthGroup& g, const Vec& seed, double tol = 1e-9);

/// Reynolds operator at a point: (1/|G|) sum_g f(g x).
double reynolds_eval(const FiniteOrthGroup& g, const std::function<double(const Vec&)>& f,
                     const Vec& x);

struct MolienTable {
  std::string group;
  std::vector<int> dims;           // dims[l] = dim of the degree-l invariant harmonic space
  double max_integrality_error = 0.0;
};

/// Power-series coefficients of (1/|G|) sum_g (1 - w^2)/det(I - w g), rounded to
/// integers. Throws NonIntegerCoefficient if a coefficient strays > 1e-6 from Z.
MolienTable molien_dims(const FiniteOrthGroup& g, int l_max);

}  // namespace sphd
