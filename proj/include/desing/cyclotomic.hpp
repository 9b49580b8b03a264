#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "desing/rational.hpp"

namespace desing {

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

long euler_totient(long n);

// Element of Q(zeta_n) in the power basis 1, zeta_n, ..., zeta_n^{phi(n)-1}.
// Binary operations between different orders embed both operands in the
// field of order lcm(n, m); Q itself is the order-1 field.
class CyclotomicNumber {
 public:
  CyclotomicNumber();
  CyclotomicNumber(const Rational& q);  // NOLINT(google-explicit-constructor)
  CyclotomicNumber(long q) : CyclotomicNumber(Rational(q)) {}  // NOLINT
  CyclotomicNumber(int order, std::vector<Rational> coeffs);

  // zeta_n^k with zeta_n = exp(2 pi i / n).
  static CyclotomicNumber root_of_unity(int order, long power);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Constant coordinate; throws ConsistencyError unless is_rational().
  Rational to_rational() const;

  // Same element expressed in Q(zeta_n); requires order() | n.
  CyclotomicNumber in_order(int n) const;
  // Automorphism zeta -> zeta^a, gcd(a, order) = 1.
  CyclotomicNumber galois(long a) const;
  CyclotomicNumber inverse() const;
  CyclotomicNumber pow(long k) const;

  std::complex<double> to_complex() const;
  std::string to_string() const;
  // Stable text key: order and coefficient list.
  std::string key() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  CyclotomicNumber operator-() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z);

}  // namespace desing
