#pragma once

#include <map>
#include <optional>
#include <string>

#include "desing/multiple_zeta.hpp"
#include "desing/polynomial.hpp"

namespace desing {

// Which argument of zeta_2 is the non-positive integer -N.
enum class NegArg { second, first };

// rational + sum_k c_k zeta(k), k >= 2.
struct ZetaValue {
  Rational rational;
  std::map<int, Rational> zeta;

  double value() const;
  std::string to_string() const;
  ZetaValue& operator+=(const ZetaValue& o);
  friend ZetaValue operator+(ZetaValue a, const ZetaValue& b) { return a += b; }
  friend ZetaValue operator*(const Rational& q, const ZetaValue& a);
  friend bool operator==(const ZetaValue& a, const ZetaValue& b) {
    return a.rational == b.rational && a.zeta == b.zeta;
  }
};

// sum_a P_a(s) zeta(s + a): a finite zeta combination along a line.
class ZetaLine {
 public:
  static ZetaLine term(int shift, const Poly1& p);

  const std::map<int, Poly1>& terms() const { return terms_; }
  Poly1 coeff(int shift) const;
  // E(s + b)
  ZetaLine shifted(int b) const;

  ZetaLine& operator+=(const ZetaLine& o);
  friend ZetaLine operator+(ZetaLine a, const ZetaLine& b) { return a += b; }
  friend ZetaLine operator*(const Poly1& p, const ZetaLine& e);
  friend bool operator==(const ZetaLine& a, const ZetaLine& b) { return a.terms_ == b.terms_; }

  // Removable poles (P_a(1 - a) = 0) are evaluated through (w - 1) zeta(w).
  NumResult eval(Complex s, const EvalConfig& cfg = {}) const;
  // Exact value at an integer; PoleError at a genuine pole.
  ZetaValue exact(long s) const;
  std::string to_string() const;

 private:
  void add(int shift, const Poly1& p);
  std::map<int, Poly1> terms_;
};

// zeta_2(s, -N) (second) or zeta_2(-N, s) (first) as a zeta combination in s.
ZetaLine ez2_neg_line_expr(NegArg which, int N);
NumResult ez2_neg_args(NegArg which, Complex s, int N, const EvalConfig& cfg = {});

// zeta_2^des(s, -N) (second) or zeta_2^des(-N, s) (first).
ZetaLine ez2_des_neg_line(int N, NegArg which = NegArg::second);

// Euler-Zagier zeta_2: accelerated direct sum inside the region, Mellin-Barnes outside.
NumResult ez2_value(Complex s1, Complex s2, const EvalConfig& cfg = {});

// Distance from (s1, s2) to the singular hyperplanes of the three zeta_2
// terms in the desingularized combination.
double ez2_des_singular_distance(Complex s1, Complex s2);

// Desingularized double zeta (entire); dispatches to closed forms on special lines.
NumResult ez2_des(Complex s1, Complex s2, const EvalConfig& cfg = {});

// The three-term combination only (no closed-form lines); a Richardson limit
// within 1e-3 of a constituent hyperplane.
NumResult ez2_des_combination(Complex s1, Complex s2, const EvalConfig& cfg = {});

// Exact value at integer points covered by closed forms: s1 <= 0 or s2 <= 0,
// (1, 1), (2, 1). Empty otherwise.
std::optional<ZetaValue> ez2_des_exact(long s1, long s2);

}  // namespace desing
