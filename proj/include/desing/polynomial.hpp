#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "desing/rational.hpp"

namespace desing {

// Dense univariate polynomial in s with rational coefficients, lowest degree first.
class Poly1 {
 public:
  Poly1() = default;
  Poly1(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly1(std::vector<Rational> coeffs);
  static Poly1 s() { return Poly1(std::vector<Rational>{0, 1}); }
  // s + a
  static Poly1 linear(const Rational& a) { return Poly1(std::vector<Rational>{a, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  std::complex<double> operator()(std::complex<double> x) const;
  // P(s + a)
  Poly1 shifted(const Rational& a) const;
  // P(s) / (s - root); requires P(root) = 0.
  Poly1 divide_root(const Rational& root) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Sparse multivariate polynomial in s_1..s_d with rational coefficients.
class SPoly {
 public:
  using Exponents = std::vector<int>;

  explicit SPoly(int nvars = 0) : nvars_(nvars) {}
  static SPoly constant(int nvars, const Rational& c);
  // s_j + a, j zero-based
  static SPoly variable(int nvars, int j, const Rational& a = 0);
  // (s_j)_l = s_j (s_j + 1) ... (s_j + l - 1)
  static SPoly pochhammer(int nvars, int j, int l);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  std::complex<double> operator()(const std::vector<std::complex<double>>& s) const;
  Rational operator()(const std::vector<Rational>& s) const;

  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend SPoly operator*(const Rational& q, const SPoly& a);
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const SPoly& a, const SPoly& b) { return !(a == b); }

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace desing
