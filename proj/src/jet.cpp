#include "paraslant/jet.hpp"

#include <cmath>

namespace paraslant {

Jet3::Jet3(int vars)
    : m_(vars),
      v_(0.0),
      g_(static_cast<size_t>(vars), 0.0),
      h_(static_cast<size_t>(vars) * vars, 0.0),
      t_(static_cast<size_t>(vars) * vars * vars, 0.0) {}

Jet3 Jet3::constant(double c, int vars) {
  Jet3 j(vars);
  j.v_ = c;
  return j;
}

Jet3 Jet3::variable(int index, double value, int vars) {
  if (index < 0 || index >= vars) throw InputError("jet variable index out of range");
  Jet3 j(vars);
  j.v_ = value;
  j.g_[index] = 1.0;
  return j;
}

void Jet3::check_same(const Jet3& o) const {
  if (m_ != o.m_) throw InputError("jet variable-count mismatch");
}

Jet3 Jet3::operator-() const {
  Jet3 r(m_);
  r.v_ = -v_;
  for (size_t i = 0; i < g_.size(); ++i) r.g_[i] = -g_[i];
  for (size_t i = 0; i < h_.size(); ++i) r.h_[i] = -h_[i];
  for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = -t_[i];
  return r;
}

Jet3 Jet3::operator+(const Jet3& o) const {
  check_same(o);
  Jet3 r(m_);
  r.v_ = v_ + o.v_;
  for (size_t i = 0; i < g_.size(); ++i) r.g_[i] = g_[i] + o.g_[i];
  for (size_t i = 0; i < h_.size(); ++i) r.h_[i] = h_[i] + o.h_[i];
  for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] + o.t_[i];
  return r;
}

Jet3 Jet3::operator-(const Jet3& o) const {
  check_same(o);
  Jet3 r(m_);
  r.v_ = v_ - o.v_;
  for (size_t i = 0; i < g_.size(); ++i) r.g_[i] = g_[i] - o.g_[i];
  for (size_t i = 0; i < h_.size(); ++i) r.h_[i] = h_[i] - o.h_[i];
  for (size_t i = 0; i < t_.size(); ++i) r.t_[i] = t_[i] - o.t_[i];
  return r;
}

Jet3 Jet3::operator*(const Jet3& o) const {
  check_same(o);
  Jet3 r(m_);
  const Jet3& a = *this;
  const Jet3& b = o;
  r.v_ = a.v_ * b.v_;
  for (int i = 0; i < m_; ++i)
    r.g_[i] = a.g_[i] * b.v_ + a.v_ * b.g_[i];
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      r.h_[idx2(i, j)] = a.h_[idx2(i, j)] * b.v_ + a.g_[i] * b.g_[j] +
                         a.g_[j] * b.g_[i] + a.v_ * b.h_[idx2(i, j)];
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        r.t_[idx3(i, j, k)] =
            a.t_[idx3(i, j, k)] * b.v_ + a.v_ * b.t_[idx3(i, j, k)] +
            a.h_[idx2(i, j)] * b.g_[k] + a.h_[idx2(i, k)] * b.g_[j] +
            a.h_[idx2(j, k)] * b.g_[i] + a.g_[i] * b.h_[idx2(j, k)] +
            a.g_[j] * b.h_[idx2(i, k)] + a.g_[k] * b.h_[idx2(i, j)];
  return r;
}

Jet3 Jet3::operator/(const Jet3& o) const {
  check_same(o);
  if (o.v_ == 0.0) throw JetError("jet-division-by-zero");
  const double v = o.v_;
  Jet3 inv = o.compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v),
                       -6.0 / (v * v * v * v));
  return *this * inv;
}

Jet3 Jet3::compose(double f0, double f1, double f2, double f3) const {
  Jet3 r(m_);
  r.v_ = f0;
  for (int i = 0; i < m_; ++i) r.g_[i] = f1 * g_[i];
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      r.h_[idx2(i, j)] = f1 * h_[idx2(i, j)] + f2 * g_[i] * g_[j];
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      for (int k = 0; k < m_; ++k)
        r.t_[idx3(i, j, k)] =
            f1 * t_[idx3(i, j, k)] +
            f2 * (g_[i] * h_[idx2(j, k)] + g_[j] * h_[idx2(i, k)] +
                  g_[k] * h_[idx2(i, j)]) +
            f3 * g_[i] * g_[j] * g_[k];
  return r;
}

Jet3 cosh(const Jet3& a) {
  const double v = a.value();
  return a.compose(std::cosh(v), std::sinh(v), std::cosh(v), std::sinh(v));
}

Jet3 sinh(const Jet3& a) {
  const double v = a.value();
  return a.compose(std::sinh(v), std::cosh(v), std::sinh(v), std::cosh(v));
}

Jet3 cos(const Jet3& a) {
  const double v = a.value();
  return a.compose(std::cos(v), -std::sin(v), -std::cos(v), std::sin(v));
}

Jet3 sin(const Jet3& a) {
  const double v = a.value();
  return a.compose(std::sin(v), std::cos(v), -std::sin(v), -std::cos(v));
}

Jet3 exp(const Jet3& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e, e);
}

Jet3 sqrt(const Jet3& a) {
  const double v = a.value();
  if (v <= 0.0) throw JetError("jet-domain-error");
  const double s = std::sqrt(v);
  return a.compose(s, 0.5 / s, -0.25 / (s * v), 0.375 / (s * v * v));
}

Jet3 ipow(const Jet3& a, int n) {
  const double v = a.value();
  // Derivative coefficients n, n(n-1), n(n-1)(n-2); a zero coefficient
  // kills the term before any negative power of v is needed.
  double f[4];
  for (int k = 0; k <= 3; ++k) {
    double coeff = 1.0;
    for (int j = 0; j < k; ++j) coeff *= static_cast<double>(n - j);
    if (coeff == 0.0) {
      f[k] = 0.0;
      continue;
    }
    const int e = n - k;
    if (v == 0.0) {
      if (e < 0) throw JetError("jet-domain-error");
      f[k] = (e == 0) ? coeff : 0.0;
    } else {
      f[k] = coeff * std::pow(v, e);
    }
  }
  return a.compose(f[0], f[1], f[2], f[3]);
}

Jet3 derivative_jet(const Jet3& a, int i) {
  if (i < 0 || i >= a.vars()) throw InputError("derivative_jet: index out of range");
  Jet3 r(a.vars());
  const int m = a.vars();
  r.v_ = a.g_[i];
  for (int j = 0; j < m; ++j) r.g_[j] = a.h_[a.idx2(i, j)];
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) r.h_[r.idx2(j, k)] = a.t_[a.idx3(i, j, k)];
  return r;
}

}  // namespace paraslant
