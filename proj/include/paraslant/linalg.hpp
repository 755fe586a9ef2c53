#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "paraslant/errors.hpp"

namespace paraslant {

inline double absval(double x) { return std::fabs(x); }

// Dense row-major matrix over a small ring. Everything in this project is
// at most 8x8, so the solvers favour clarity and pivoting over speed.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using Mat = Matrix<double>;
using Vec = std::vector<double>;

inline Mat zeros(int r, int c) { return Mat(r, c, 0.0); }

inline Mat identity(int n) {
  Mat I = zeros(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1.0;
  return I;
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InputError("matmul: inner dimension mismatch");
  const T zero = a(0, 0) - a(0, 0);
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k)
      for (int j = 0; j < b.cols(); ++j) out(i, j) = out(i, j) + a(i, k) * b(k, j);
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  const T zero = a(0, 0) - a(0, 0);
  Matrix<T> out(a.cols(), a.rows(), zero);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

// Gaussian elimination with partial pivoting; pivots compared through
// absval() so the same code runs on jets (pivot on the jet's value).
template <class T>
Matrix<T> solve(Matrix<T> a, Matrix<T> b) {
  const int n = a.rows();
  if (a.cols() != n || b.rows() != n) throw InputError("solve: shape mismatch");
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (absval(a(r, col)) > absval(a(piv, col))) piv = r;
    if (absval(a(piv, col)) == 0.0)
      throw DegenerateMetricError("solve: singular matrix");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      for (int j = 0; j < b.cols(); ++j) std::swap(b(col, j), b(piv, j));
    }
    for (int r = col + 1; r < n; ++r) {
      T f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) = a(r, j) - f * a(col, j);
      for (int j = 0; j < b.cols(); ++j) b(r, j) = b(r, j) - f * b(col, j);
    }
  }
  const T zero = a(0, 0) - a(0, 0);
  Matrix<T> x(n, b.cols(), zero);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = 0; j < b.cols(); ++j) {
      T s = b(i, j);
      for (int k = i + 1; k < n; ++k) s = s - a(i, k) * x(k, j);
      x(i, j) = s / a(i, i);
    }
  }
  return x;
}

double det(Mat a);

// Orthonormal-free null space basis of an r x c matrix, columns spanning
// {x : a x = 0}; rank decided against tol * (largest row sup-norm).
Mat kernel_basis(const Mat& a, double tol);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> sym_eigenvalues(Mat a);

double max_abs(const Mat& a);
double max_abs(const Vec& v);
Vec matvec(const Mat& a, const Vec& x);
Vec solve_vec(const Mat& a, const Vec& b);
double dot(const Vec& a, const Vec& b);
// Bilinear form a' M b.
double form(const Vec& a, const Mat& m, const Vec& b);
Vec col(const Mat& a, int j);

}  // namespace paraslant
