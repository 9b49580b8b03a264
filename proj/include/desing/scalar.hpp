#pragma once

#include <complex>
#include <optional>
#include <string>

#include "desing/cyclotomic.hpp"
#include "desing/rational.hpp"

namespace desing {

using Complex = std::complex<double>;

// A parameter that is either an exact rational or a complex float.
class Scalar {
 public:
  Scalar() : Scalar(Rational(0)) {}
  Scalar(const Rational& q) : exact_(q), value_(0.0, 0.0) {  // NOLINT
    exact_->canonicalize();
    value_ = Complex(exact_->get_d(), 0.0);
  }
  Scalar(long q) : Scalar(Rational(q)) {}                          // NOLINT
  Scalar(int q) : Scalar(Rational(q)) {}                           // NOLINT
  static Scalar numeric(Complex z);

  bool is_exact() const { return exact_.has_value(); }
  // Throws ParameterError for non-exact values.
  const Rational& exact() const;
  Complex value() const { return value_; }
  std::string to_string() const;

  bool is_zero() const { return exact_ ? *exact_ == 0 : value_ == Complex(0, 0); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Exact when both operands are exact.
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;

 private:
  std::optional<Rational> exact_;
  Complex value_;
};

// Twist parameter xi: a root of unity exp(2 pi i power/order) kept in lowest
// terms, or an arbitrary complex number with |xi| <= 1.
class Twist {
 public:
  Twist() = default;  // xi = 1
  static Twist root(int order, long power);
  static Twist numeric(Complex z);
  static Twist one() { return root(1, 0); }

  bool is_root_of_unity() const { return order_ > 0; }
  int order() const { return order_; }
  long power() const { return power_; }
  // delta(k): exact test, no tolerance.
  bool is_one() const;
  bool is_minus_one() const;
  Complex value() const;
  // Throws ParameterError when not a root of unity.
  CyclotomicNumber exact() const;
  std::string to_string() const;

  friend bool operator==(const Twist& a, const Twist& b);
  friend bool operator!=(const Twist& a, const Twist& b) { return !(a == b); }

 private:
  int order_ = 1;
  long power_ = 0;
  Complex value_{1.0, 0.0};
};

// Parses "1", "-1", "i", "-i", "e(k/n)" or a complex "re+imi" into a Twist.
Twist parse_twist(const std::string& text);
// Parses "p/q" / integer into an exact Scalar, otherwise "re+imi" into a numeric one.
Scalar parse_scalar(const std::string& text);
// Parses "re", "re+imi", "re-imi", "imi".
Complex parse_complex(const std::string& text);

}  // namespace desing
