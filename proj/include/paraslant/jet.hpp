#pragma once

#include <vector>

#include "paraslant/errors.hpp"

namespace paraslant {

// Truncated multivariate Taylor expansion of order 3: value, gradient,
// Hessian and third-derivative tensor in a fixed set of variables. The
// coefficient tensors are stored dense and kept fully symmetric by every
// operation. Values are immutable from the caller's point of view; all
// arithmetic returns fresh jets.
class Jet3 {
 public:
  Jet3() : Jet3(0) {}
  explicit Jet3(int vars);

  static Jet3 constant(double c, int vars);
  static Jet3 variable(int index, double value, int vars);

  int vars() const { return m_; }
  double value() const { return v_; }
  double grad(int i) const { return g_[i]; }
  double hess(int i, int j) const { return h_[idx2(i, j)]; }
  double third(int i, int j, int k) const { return t_[idx3(i, j, k)]; }

  Jet3 operator-() const;
  Jet3 operator+(const Jet3& o) const;
  Jet3 operator-(const Jet3& o) const;
  Jet3 operator*(const Jet3& o) const;
  Jet3 operator/(const Jet3& o) const;

  // Univariate composition through order 3 (Faa di Bruno) given the
  // outer function's derivatives at value().
  Jet3 compose(double f0, double f1, double f2, double f3) const;

 private:
  size_t idx2(int i, int j) const { return static_cast<size_t>(i) * m_ + j; }
  size_t idx3(int i, int j, int k) const {
    return (static_cast<size_t>(i) * m_ + j) * m_ + k;
  }
  void check_same(const Jet3& o) const;

  int m_;
  double v_;
  std::vector<double> g_;  // m
  std::vector<double> h_;  // m*m, symmetric
  std::vector<double> t_;  // m*m*m, fully symmetric

  friend Jet3 derivative_jet(const Jet3& a, int i);
};

Jet3 cosh(const Jet3& a);
Jet3 sinh(const Jet3& a);
Jet3 cos(const Jet3& a);
Jet3 sin(const Jet3& a);
Jet3 exp(const Jet3& a);
Jet3 sqrt(const Jet3& a);
Jet3 ipow(const Jet3& a, int n);

inline double absval(const Jet3& a) {
  double v = a.value();
  return v < 0 ? -v : v;
}

// The jet of d(a)/du_i as a function of the same variables. Only valid
// one order lower than the input: its third tensor is unknown and set
// to zero. Callers must not read coefficients past that order.
Jet3 derivative_jet(const Jet3& a, int i);

}  // namespace paraslant
