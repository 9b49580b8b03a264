#pragma once

#include <cstddef>
#include <vector>

#include "desing/errors.hpp"
#include "desing/rational.hpp"

namespace desing {

// Univariate series sum_{k<=N} a_k t^k truncated at order N (ordinary
// coefficients, not divided-power ones).
template <class T>
class PowerSeries1 {
 public:
  explicit PowerSeries1(int order) : coeffs_(static_cast<size_t>(order) + 1, T(0)) {
    if (order < 0) throw ParameterError("negative truncation order");
  }
  PowerSeries1(int order, std::vector<T> coeffs) : PowerSeries1(order) {
    for (size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  // exp(a t) truncated.
  static PowerSeries1 exp_linear(int order, const T& a) {
    PowerSeries1 s(order);
    T term(1);
    for (int k = 0; k <= order; ++k) {
      s.coeffs_[k] = term;
      term = term * a * T(Rational(1, k + 1));
    }
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_[k]; }
  T& operator[](int k) { return coeffs_[k]; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  // Coefficient of t^k/k!.
  T divided_power_coeff(int k) const { return coeffs_[k] * T(Rational(factorial(k))); }

  PowerSeries1& operator+=(const PowerSeries1& o) {
    check(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  PowerSeries1& operator-=(const PowerSeries1& o) {
    check(o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend PowerSeries1 operator+(PowerSeries1 a, const PowerSeries1& b) { return a += b; }
  friend PowerSeries1 operator-(PowerSeries1 a, const PowerSeries1& b) { return a -= b; }

  friend PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b) {
    a.check(b);
    PowerSeries1 c(a.order());
    for (int i = 0; i <= a.order(); ++i)
      for (int j = 0; i + j <= a.order(); ++j) c.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return c;
  }
  friend PowerSeries1 operator*(const T& s, PowerSeries1 a) {
    for (auto& c : a.coeffs_) c = s * c;
    return a;
  }

  // a / b, b[0] invertible.
  friend PowerSeries1 operator/(const PowerSeries1& a, const PowerSeries1& b) {
    a.check(b);
    if (b.coeffs_[0] == T(0)) throw ParameterError("series division by non-unit");
    T inv = T(1) / b.coeffs_[0];
    PowerSeries1 q(a.order());
    for (int k = 0; k <= a.order(); ++k) {
      T acc = a.coeffs_[k];
      for (int j = 1; j <= k; ++j) acc -= b.coeffs_[j] * q.coeffs_[k - j];
      q.coeffs_[k] = acc * inv;
    }
    return q;
  }

 private:
  void check(const PowerSeries1& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw ParameterError("series truncation orders differ");
  }
  std::vector<T> coeffs_;
};

}  // namespace desing
