#pragma once

#include <cmath>
#include <vector>

namespace sphd {

using Vec = std::vector<double>;

/// Dense square matrix, row-major. Dimensions here are tiny (3..8).
struct Mat {
  int n = 0;
  std::vector<double> a;

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static Mat identity(int dim);
};

Mat operator*(const Mat& x, const Mat& y);
Vec mat_apply(const Mat& m, const Vec& v);
Mat transpose(const Mat& m);

double dot(const Vec& x, const Vec& y);
double norm(const Vec& x);
Vec normalized(const Vec& x);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const Vec& x, double s);
Vec cross3(const Vec& x, const Vec& y);
double max_abs_diff(const Vec& x, const Vec& y);

/// I - (2/|v|^2) v v^T, the reflection through the hyperplane normal to v.
Mat reflection_matrix(const Vec& root);

/// max_ij |(M M^T - I)_ij|
double orthogonality_error(const Mat& m);

double determinant(Mat m);

/// Coefficients q_0..q_n of det(I - w*M) as a polynomial in w (q_0 = 1).
/// Computed via the Faddeev-LeVerrier recurrence on the characteristic polynomial.
std::vector<double> det_one_minus_w(const Mat& m);

}  // namespace sphd
