#pragma once

#include <gmpxx.h>

#include <string>

namespace desing {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws ParameterError.
Rational parse_rational(const std::string& text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

inline Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// q^k for integer k (q != 0 when k < 0); 0^0 = 1.
Rational rational_pow(const Rational& q, long k);

}  // namespace desing
