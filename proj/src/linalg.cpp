#include "paraslant/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace paraslant {

double det(Mat a) {
  const int n = a.rows();
  if (a.cols() != n) throw InputError("det: matrix not square");
  double d = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      d = -d;
    }
    d *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      double f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return d;
}

Mat kernel_basis(const Mat& a, double tol) {
  const int r = a.rows();
  const int c = a.cols();
  Mat m = a;
  double scale = max_abs(a);
  if (scale == 0.0) scale = 1.0;
  const double cutoff = tol * scale;

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < c && row < r; ++col) {
    int piv = row;
    for (int k = row + 1; k < r; ++k)
      if (std::fabs(m(k, col)) > std::fabs(m(piv, col))) piv = k;
    if (std::fabs(m(piv, col)) <= cutoff) continue;
    if (piv != row)
      for (int j = 0; j < c; ++j) std::swap(m(row, j), m(piv, j));
    for (int k = 0; k < r; ++k) {
      if (k == row) continue;
      double f = m(k, col) / m(row, col);
      for (int j = 0; j < c; ++j) m(k, j) -= f * m(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<int> free_cols;
  for (int col = 0; col < c; ++col)
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
      free_cols.push_back(col);

  Mat basis = zeros(c, static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], static_cast<int>(f)) = 1.0;
    for (size_t p = 0; p < pivot_col.size(); ++p)
      basis(pivot_col[p], static_cast<int>(f)) =
          -m(static_cast<int>(p), free_cols[f]) / m(static_cast<int>(p), pivot_col[p]);
  }
  return basis;
}

std::vector<double> sym_eigenvalues(Mat a) {
  const int n = a.rows();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double cs = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * cs;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = cs * akp - sn * akq;
          a(k, q) = sn * akp + cs * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = cs * apk - sn * aqk;
          a(q, k) = sn * apk + cs * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

double max_abs(const Mat& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(a(i, j)));
  return m;
}

double max_abs(const Vec& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

Vec matvec(const Mat& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw InputError("matvec: dimension mismatch");
  Vec y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Vec solve_vec(const Mat& a, const Vec& b) {
  Mat rhs(static_cast<int>(b.size()), 1, 0.0);
  for (size_t i = 0; i < b.size(); ++i) rhs(static_cast<int>(i), 0) = b[i];
  Mat x = solve(a, rhs);
  Vec out(a.rows());
  for (int i = 0; i < a.rows(); ++i) out[i] = x(i, 0);
  return out;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double form(const Vec& a, const Mat& m, const Vec& b) {
  return dot(a, matvec(m, b));
}

Vec col(const Mat& a, int j) {
  Vec v(a.rows());
  for (int i = 0; i < a.rows(); ++i) v[i] = a(i, j);
  return v;
}

}  // namespace paraslant
