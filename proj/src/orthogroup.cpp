#include "sphdesign/orthogroup.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "sphdesign/error.hpp"

namespace sphd {

namespace {

constexpr double kPhi = 1.6180339887498948482;  // golden ratio

/// Snaps doubles to canonical representatives so matrices/vectors can be used
/// as exact hash keys. Entries of the groups handled here are separated by
/// far more than the merge tolerance, so no chaining can occur.
class ValueSnapper {
 public:
  explicit ValueSnapper(double tol) : tol_(tol) {}

  int id_of(double x) {
    auto it = std::lower_bound(vals_.begin(), vals_.end(), std::pair<double, int>{x - tol_, -1});
    if (it != vals_.end() && std::abs(it->first - x) <= tol_) return it->second;
    const int id = next_id_++;
    vals_.insert(it, {x, id});
    return id;
  }

 private:
  double tol_;
  int next_id_ = 0;
  std::vector<std::pair<double, int>> vals_;  // sorted by value
};

struct KeyHash {
  std::size_t operator()(const std::vector<int>& k) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : k) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<int> mat_key(const Mat& m, ValueSnapper& snap) {
  std::vector<int> key;
  key.reserve(m.a.size());
  for (double v : m.a) key.push_back(snap.id_of(v));
  return key;
}

std::vector<Vec> simplex_roots(int d) {
  // Regular d-simplex realized in R^d: vertices v_i with <v_i, v_j> = -1/d.
  // Roots are the vertex differences; their reflections swap vertex pairs.
  const int n = d + 1;
  std::vector<Vec> corners(n, Vec(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) corners[i][j] = (i == j ? 1.0 : 0.0) - 1.0 / n;
  }
  // Orthonormal basis of the hyperplane sum(x) = 0 via Gram-Schmidt.
  std::vector<Vec> basis;
  for (int i = 0; i < n && static_cast<int>(basis.size()) < d; ++i) {
    Vec v = corners[i];
    for (const Vec& b : basis) v = sub(v, scale(b, dot(v, b)));
    if (norm(v) > 1e-9) basis.push_back(normalized(v));
  }
  std::vector<Vec> verts;
  for (int i = 0; i < n; ++i) {
    Vec u(d);
    for (int k = 0; k < d; ++k) u[k] = dot(basis[k], corners[i]);
    verts.push_back(normalized(u));
  }
  std::vector<Vec> roots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) roots.push_back(sub(verts[i], verts[j]));
  return roots;
}

std::vector<Vec> bd_roots(int d, bool include_axes) {
  std::vector<Vec> roots;
  if (include_axes) {
    for (int i = 0; i < d; ++i) {
      Vec e(d, 0.0);
      e[i] = 1.0;
      roots.push_back(e);
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (double s : {1.0, -1.0}) {
        Vec v(d, 0.0);
        v[i] = 1.0;
        v[j] = s;
        roots.push_back(v);
      }
    }
  }
  return roots;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool perm_is_even(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

}  // namespace

std::vector<Vec> h4_roots() {
  std::vector<Vec> roots;
  // 16 of (1/2)(+-1, +-1, +-1, +-1)
  for (int mask = 0; mask < 16; ++mask) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? -0.5 : 0.5;
    roots.push_back(v);
  }
  // 8 permutations of (+-1, 0, 0, 0)
  for (int i = 0; i < 4; ++i) {
    for (double s : {1.0, -1.0}) {
      Vec v(4, 0.0);
      v[i] = s;
      roots.push_back(v);
    }
  }
  // 96 even permutations of (1/2)(+-phi, +-1, +-1/phi, 0)
  std::vector<int> perm = {0, 1, 2, 3};
  std::vector<double> base = {kPhi / 2, 0.5, 0.5 / kPhi, 0.0};
  do {
    if (!perm_is_even(perm)) continue;
    for (int mask = 0; mask < 8; ++mask) {
      Vec v(4);
      bool skip = false;
      int bit = 0;
      for (int i = 0; i < 4; ++i) {
        double c = base[perm[i]];
        if (c == 0.0) {
          v[i] = 0.0;
          continue;
        }
        v[i] = (mask >> bit & 1) ? -c : c;
        ++bit;
      }
      if (!skip) roots.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return roots;
}

FiniteOrthGroup generate_group(const std::vector<Vec>& roots, const GenerateOptions& opt) {
  if (roots.empty()) fail("ClosureOverflow", "no roots supplied");
  const int n = static_cast<int>(roots[0].size());
  for (const Vec& r : roots) {
    if (static_cast<int>(r.size()) != n) fail("ClosureOverflow", "inconsistent root dimensions");
    if (norm(r) < 1e-12) fail("ClosureOverflow", "zero root");
  }
  const std::size_t cap =
      opt.expected_order > 0 ? static_cast<std::size_t>(10 * opt.expected_order) : opt.element_cap;

  std::vector<Mat> gens;
  for (const Vec& r : roots) gens.push_back(reflection_matrix(r));

  ValueSnapper snap(opt.dedup_tol);
  std::unordered_set<std::vector<int>, KeyHash> seen;
  std::vector<Mat> elements;
  std::deque<std::size_t> queue;

  auto insert = [&](Mat m) -> bool {
    auto key = mat_key(m, snap);
    if (!seen.insert(std::move(key)).second) return false;
    elements.push_back(std::move(m));
    return true;
  };

  insert(Mat::identity(n));
  queue.push_back(0);
  for (const Mat& g : gens) {
    if (insert(g)) queue.push_back(elements.size() - 1);
  }
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const Mat& g : gens) {
      Mat p = elements[idx] * g;
      if (insert(std::move(p))) {
        if (elements.size() > cap)
          fail("ClosureOverflow",
               "closure exceeded " + std::to_string(cap) + " elements; roots do not generate a "
               "finite group of the expected size");
        queue.push_back(elements.size() - 1);
      }
    }
  }

  if (opt.expected_order > 0 && static_cast<long>(elements.size()) != opt.expected_order)
    fail("GroupOrderMismatch", opt.name + ": closure has " + std::to_string(elements.size()) +
                                   " elements, expected " + std::to_string(opt.expected_order));

  FiniteOrthGroup g;
  g.name = opt.name;
  g.dim = n;
  g.homogeneity_t = opt.homogeneity_t;
  g.elements = std::move(elements);
  return g;
}

const FiniteOrthGroup& named_group(const std::string& label) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<FiniteOrthGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(label);
  if (it != cache.end()) return *it->second;

  GenerateOptions opt;
  opt.name = label;
  std::vector<Vec> roots;

  if (label == "A3") {
    // Tetrahedral group: signed permutations with an even number of sign changes.
    roots = bd_roots(3, false);
    opt.expected_order = 24;
    opt.homogeneity_t = 2;
  } else if (label == "A4") {
    roots = {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}, {0, 1 - kPhi, kPhi - 2, 1}};
    opt.expected_order = 120;
    opt.homogeneity_t = 2;
  } else if (label == "A5" || label == "A6") {
    const int d = label[1] - '0';
    roots = simplex_roots(d);
    opt.expected_order = factorial(d + 1);
    opt.homogeneity_t = 2;
  } else if (label.size() == 2 && label[0] == 'B' && label[1] >= '2' && label[1] <= '6') {
    const int d = label[1] - '0';
    roots = bd_roots(d, true);
    opt.expected_order = (1L << d) * factorial(d);
    opt.homogeneity_t = 3;
  } else if (label.size() == 2 && label[0] == 'D' && label[1] >= '4' && label[1] <= '6') {
    const int d = label[1] - '0';
    roots = bd_roots(d, false);
    opt.expected_order = (1L << (d - 1)) * factorial(d);
    opt.homogeneity_t = 3;
  } else if (label == "H3") {
    roots = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {kPhi / 2, 0.5 / kPhi, 0.5}};
    opt.expected_order = 120;
    opt.homogeneity_t = 5;
  } else if (label == "F4") {
    roots = {{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {1, -1, -1, -1}};
    opt.expected_order = 1152;
    opt.homogeneity_t = 5;
  } else if (label == "H4") {
    roots = h4_roots();
    opt.expected_order = 14400;
    opt.homogeneity_t = 11;
  } else {
    fail("UnknownGroup", "no named group '" + label + "'");
  }

  auto g = std::make_unique<FiniteOrthGroup>(generate_group(roots, opt));
  auto [pos, ok] = cache.emplace(label, std::move(g));
  (void)ok;
  return *pos->second;
}

std::vector<Vec> orbit(const FiniteOrthGroup& g, const Vec& seed, double tol) {
  ValueSnapper snap(tol);
  std::unordered_set<std::vector<int>, KeyHash> seen;
  std::vector<Vec> points;
  for (const Mat& m : g.elements) {
    Vec p = mat_apply(m, seed);
    std::vector<int> key;
    key.reserve(p.size());
    for (double v : p) key.push_back(snap.id_of(v));
    if (seen.insert(std::move(key)).second) points.push_back(std::move(p));
  }
  return points;
}

double reynolds_eval(const FiniteOrthGroup& g, const std::function<double(const Vec&)>& f,
                     const Vec& x) {
  double s = 0.0;
  for (const Mat& m : g.elements) s += f(mat_apply(m, x));
  return s / static_cast<double>(g.elements.size());
}

MolienTable molien_dims(const FiniteOrthGroup& g, int l_max) {
  const std::size_t len = static_cast<std::size_t>(l_max) + 1;
  std::vector<double> acc(len, 0.0);
  std::vector<double> recip(len);
  for (const Mat& m : g.elements) {
    const std::vector<double> q = det_one_minus_w(m);  // q_0 = 1
    // Power series of 1/q to order l_max.
    recip.assign(len, 0.0);
    recip[0] = 1.0;
    for (std::size_t k = 1; k < len; ++k) {
      double s = 0.0;
      const std::size_t top = std::min(k, q.size() - 1);
      for (std::size_t j = 1; j <= top; ++j) s += q[j] * recip[k - j];
      recip[k] = -s;
    }
    // Multiply by (1 - w^2) and accumulate.
    for (std::size_t k = 0; k < len; ++k) {
      double v = recip[k];
      if (k >= 2) v -= recip[k - 2];
      acc[k] += v;
    }
  }

  MolienTable table;
  table.group = g.name;
  table.dims.resize(len);
  for (std::size_t k = 0; k < len; ++k) {
    const double v = acc[k] / static_cast<double>(g.elements.size());
    const double r = std::round(v);
    table.max_integrality_error = std::max(table.max_integrality_error, std::abs(v - r));
    if (std::abs(v - r) > 1e-6)
      fail("NonIntegerCoefficient", g.name + " Molien coefficient at degree " +
                                        std::to_string(k) + " is " + std::to_string(v));
    table.dims[k] = static_cast<int>(r);
  }
  return table;
}

}  // namespace sphd
