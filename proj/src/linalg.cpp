#include "sphdesign/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace sphd {

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  assert(x.n == y.n);
  Mat r(x.n);
  const int n = x.n;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double v = x(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += v * y(k, j);
    }
  }
  return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  assert(static_cast<int>(v.size()) == m.n);
  Vec r(v.size(), 0.0);
  for (int i = 0; i < m.n; ++i) {
    double s = 0.0;
    for (int j = 0; j < m.n; ++j) s += m(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

Mat transpose(const Mat& m) {
  Mat r(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r(j, i) = m(i, j);
  return r;
}

double dot(const Vec& x, const Vec& y) {
  assert(x.size() == y.size());
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm(const Vec& x) { return std::sqrt(dot(x, x)); }

Vec normalized(const Vec& x) {
  const double n = norm(x);
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] / n;
  return r;
}

Vec add(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

Vec scale(const Vec& x, double s) {
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * s;
  return r;
}

Vec cross3(const Vec& x, const Vec& y) {
  assert(x.size() == 3 && y.size() == 3);
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

double max_abs_diff(const Vec& x, const Vec& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

Mat reflection_matrix(const Vec& root) {
  const int n = static_cast<int>(root.size());
  const double nn = dot(root, root);
  Mat m = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) -= 2.0 * root[i] * root[j] / nn;
  return m;
}

double orthogonality_error(const Mat& m) {
  double err = 0.0;
  const int n = m.n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += m(i, k) * m(j, k);
      err = std::max(err, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  }
  return err;
}

double determinant(Mat m) {
  const int n = m.n;
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (m(piv, c) == 0.0) return 0.0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      const double f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

std::vector<double> det_one_minus_w(const Mat& m) {
  // Characteristic polynomial det(lambda I - M) = lambda^n + c_1 lambda^{n-1} + ... + c_n
  // has c_k = (-1)^k e_k(eigenvalues), which are exactly the coefficients of det(I - w M).
  const int n = m.n;
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  Mat b = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    Mat ab = m * b;
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += ab(i, i);
    c[k] = -tr / k;
    b = ab;
    for (int i = 0; i < n; ++i) b(i, i) += c[k];
  }
  return c;
}

}  // namespace sphd
