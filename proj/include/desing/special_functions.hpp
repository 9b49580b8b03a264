#pragma once

#include <string>

#include "desing/scalar.hpp"

namespace desing {

struct EvalConfig {
  int em_terms = 40;              // N0, explicit Euler-Maclaurin terms
  int em_bernoulli_order = 20;    // M_B correction terms
  int mb_M = 0;                   // 0: smallest admissible M
  double mb_epsilon = 0.25;
  double mb_line_halflength = 0;  // initial T; 0: chosen from the point
  long direct_sum_cap = 1L << 24; // max terms in a direct multiple sum
  double tolerance = 1e-10;

  // Defaults with tolerance taken from DESING_TOLERANCE when set.
  static EvalConfig from_env();
  // Throws ParameterError on invalid fields.
  void validate() const;
};

struct NumResult {
  Complex value;
  double error_bound = 0;
  std::string method;  // "direct", "mb", "closed-form", "limit", "em", "exact"
};

// Throws AccuracyError when z is not finite.
Complex ensure_finite(Complex z, const char* what);

// Principal-ish log Gamma: exp() of it is Gamma; for Re z > 0 the branch is the principal one.
Complex log_gamma(Complex z);
// log sin(z) up to 2 pi i, safe for large |Im z|.
Complex log_sin(Complex z);

NumResult riemann_zeta(Complex s, const EvalConfig& cfg = {});
// (w - 1) zeta(w), entire.
NumResult zeta_pole_removed(Complex w, const EvalConfig& cfg = {});
// a in (0, 1].
NumResult hurwitz_zeta(Complex s, double a, const EvalConfig& cfg = {});
// Any a > 0; used for tails.
NumResult hurwitz_zeta_general(Complex s, double a, const EvalConfig& cfg = {});
// zeta(s, a) - 1/(s - 1), finite at s = 1.
NumResult hurwitz_zeta_regular(Complex s, double a, const EvalConfig& cfg = {});

// sum_{m >= 1} xi^m m^{-s}, continued analytically (phi(0, xi) = xi/(1 - xi)).
// xi a root of unity, or numeric with |xi| <= 0.95.
NumResult lerch_phi(Complex s, const Twist& xi, const EvalConfig& cfg = {});

}  // namespace desing
