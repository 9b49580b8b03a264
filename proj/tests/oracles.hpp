#pragma once
// Reference computations used only by tests. They follow different
// derivations from the library code paths they are compared against.

#include <vector>

#include "desing/cyclotomic.hpp"
#include "desing/rational.hpp"

namespace oracle {

using desing::CyclotomicNumber;
using desing::Rational;

// Stirling numbers of the second kind S(n, j).
inline std::vector<std::vector<Rational>> stirling2(int nmax) {
  std::vector<std::vector<Rational>> s(nmax + 1, std::vector<Rational>(nmax + 1, 0));
  s[0][0] = 1;
  for (int n = 1; n <= nmax; ++n)
    for (int j = 1; j <= n; ++j) s[n][j] = Rational(j) * s[n - 1][j] + s[n - 1][j - 1];
  return s;
}

// [t^k/k!] 1/(1 - xi e^t) = sum_j j! S(k,j) xi^j / (1-xi)^{j+1}
inline CyclotomicNumber lerch_neg_stirling(int k, const CyclotomicNumber& xi) {
  auto s = stirling2(k);
  CyclotomicNumber one_minus = CyclotomicNumber(1) - xi;
  CyclotomicNumber inv = one_minus.inverse();
  CyclotomicNumber acc = 0, xi_pow = 1, inv_pow = inv;
  for (int j = 0; j <= k; ++j) {
    if (s[k][j] != 0) acc += CyclotomicNumber(Rational(desing::factorial(j)) * s[k][j]) * xi_pow * inv_pow;
    xi_pow *= xi;
    inv_pow *= inv;
  }
  return acc;
}

// [y^n/n!] 1/(e^y - xi) = sum_j (-1)^j j! S(n,j) / (1-xi)^{j+1}
inline CyclotomicNumber f_coeff_stirling(int n, const CyclotomicNumber& xi) {
  auto s = stirling2(n);
  CyclotomicNumber inv = (CyclotomicNumber(1) - xi).inverse();
  CyclotomicNumber acc = 0, inv_pow = inv;
  for (int j = 0; j <= n; ++j) {
    if (s[n][j] != 0) {
      Rational w = Rational(desing::factorial(j)) * s[n][j];
      if (j % 2) w = -w;
      acc += CyclotomicNumber(w) * inv_pow;
    }
    inv_pow *= inv;
  }
  return acc;
}

// Bernoulli numbers from the power series y/(e^y - 1), by long division.
inline std::vector<Rational> bernoulli_by_division(int n) {
  std::vector<Rational> d(n + 1);  // (e^y - 1)/y
  for (int k = 0; k <= n; ++k) d[k] = Rational(1) / Rational(desing::factorial(k + 1));
  std::vector<Rational> q(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rational acc = k == 0 ? 1 : 0;
    for (int j = 1; j <= k; ++j) acc -= d[j] * q[k - j];
    q[k] = acc / d[0];
  }
  for (int k = 0; k <= n; ++k) q[k] *= Rational(desing::factorial(k));
  return q;
}

}  // namespace oracle
