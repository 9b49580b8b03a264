#pragma once

#include "desing/cyclotomic.hpp"
#include "desing/rational.hpp"

namespace desing {

// B_n with y/(e^y - 1) = sum B_n y^n / n!, so B_1 = -1/2. Memoized.
Rational bernoulli(int n);

// zeta(-k) = -B_{k+1}/(k+1) for k >= 1, zeta(0) = -1/2.
Rational zeta_nonpositive(int k);

// Coefficient of t^k/k! in 1/(1 - xi e^t). This is the series convention:
// the constant term is 1/(1 - xi), not the analytic value xi/(1 - xi).
// xi = 1 throws ParameterError (use zeta_nonpositive instead). Memoized per xi.
CyclotomicNumber lerch_neg_coeff(int k, const CyclotomicNumber& xi);

// H_k(xi^{-1}) = (1 - xi) * lerch_neg_coeff(k, xi); xi != 1.
CyclotomicNumber frobenius_euler(int k, const CyclotomicNumber& xi);

// Coefficient of y^n/n! in F(y, xi): 1/(e^y - xi) for xi != 1 and
// d/dy [y/(e^y - 1)] for xi = 1 (which gives B_{n+1}). The series value is
// checked against the Frobenius-Euler closed form; a mismatch throws
// ConsistencyError.
CyclotomicNumber f_delta_coeff(int n, const CyclotomicNumber& xi);

}  // namespace desing
