#pragma once

#include <vector>

#include "desing/cyclotomic.hpp"

namespace desing {

struct TwistedBernoulliKey {
  std::vector<int> n;                // n_1..n_r >= 0
  std::vector<CyclotomicNumber> xi;  // each != 1
};

// Coefficient of prod t_j^{n_j}/n_j! in
//   xi_1 e^{y_1}/(1 - xi_1 e^{y_1}) * prod_{j>=2} 1/(1 - xi_j e^{y_j}),
// y_j = t_j + ... + t_r. Each factor is expanded in its own y_j and the
// powers of y_j are spread over the t's multinomially.
CyclotomicNumber twisted_multi_bernoulli(const TwistedBernoulliKey& key);

struct PadicLRequest {
  std::vector<int> n;  // evaluate at (-n_1, ..., -n_r)
  long c = 2;
  long p = 3;

  // ParameterError on c <= 1, p not prime, p | c, negative n_j, empty n.
  void validate() const;
};

struct PadicLResult {
  CyclotomicNumber sum;   // in Q(zeta_{cp}), before projecting to Q
  long terms_enumerated = 0;
};

// The finite sum for L_{p,r}(-n; omega^n; c) without the rationality check.
PadicLResult padic_L_sum(const PadicLRequest& req);

// Same sum projected to Q; ConsistencyError when a non-constant coordinate
// survives.
Rational padic_L_nonpos(const PadicLRequest& req);

struct KLCheck {
  bool equal = false;
  Rational lhs;  // padic_L_nonpos at r = 1
  Rational rhs;  // (1 - c^{n+1})(1 - p^n) B_{n+1}/(n+1)
};

KLCheck kubota_leopoldt_check(int n, long c, long p);

bool is_prime(long p);

}  // namespace desing
