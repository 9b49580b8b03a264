#include <cmath>
#include <random>

#include "desing/coefficients.hpp"
#include "desing/errors.hpp"
#include "desing/ez2.hpp"
#include "doctest.h"

using namespace desing;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

Poly1 P(std::vector<Rational> c) { return Poly1(std::move(c)); }

double zeta(double s) { return riemann_zeta(s).value.real(); }

// zeta_2^des on the special lines rebuilt from the three-term combination and
// the closed forms of zeta2 on s2 = -N, by shifting expressions.
ZetaLine des_second_oracle(int N) {
  const Poly1 s = Poly1::s();
  ZetaLine e = (Poly1::linear(-1) * Poly1(Rational(-N - 1))) * ez2_neg_line_expr(NegArg::second, N);
  if (N >= 1) {
    // -N(-N+1-s) zeta2(s-1, -N+1)
    Poly1 c = Poly1(Rational(-N)) * P({Rational(1 - N), Rational(-1)});
    e += c * ez2_neg_line_expr(NegArg::second, N - 1).shifted(-1);
  }
  if (N >= 2) e += Poly1(Rational(N * (1 - N))) * ez2_neg_line_expr(NegArg::second, N - 2).shifted(-2);
  // For N = 0, 1 a coefficient vanishing at s2 = -N meets the pole of
  // zeta2(a, t) at t = 1 (residue zeta(a)); the limit leaves c'(-N) zeta(a).
  if (N == 0) e += ZetaLine::term(-1, Poly1::linear(-1) * Poly1(Rational(-1)));  // s2 (s2 + 1 - s): d/ds2 = 1 - s
  if (N == 1) e += ZetaLine::term(-2, Poly1(Rational(1)));                        // -s2 (s2 + 1): d/ds2 = 1 at -1
  return e;
}

ZetaLine des_first_oracle(int N) {
  const Poly1 s = Poly1::s();
  ZetaLine e = (Poly1(Rational(-N - 1)) * Poly1::linear(-1)) * ez2_neg_line_expr(NegArg::first, N);
  e += (s * Poly1::linear(Rational(N + 1))) * ez2_neg_line_expr(NegArg::first, N + 1).shifted(1);
  e += (Poly1(Rational(-1)) * s * Poly1::linear(1)) * ez2_neg_line_expr(NegArg::first, N + 2).shifted(2);
  return e;
}

ZetaValue zv(const Rational& q, std::map<int, Rational> z = {}) { return ZetaValue{q, std::move(z)}; }

}  // namespace

TEST_CASE("zeta2 on lines with a non-positive integer argument") {
  // zeta2(s,0), zeta2(s,-1), zeta2(0,s), zeta2(-1,s)
  ZetaLine a = ZetaLine::term(-1, Poly1(Rational(-1))) + ZetaLine::term(0, Poly1(Rational(-1, 2)));
  CHECK(ez2_neg_line_expr(NegArg::second, 0) == a);
  ZetaLine b = ZetaLine::term(-2, Poly1(Rational(-1, 2))) + ZetaLine::term(-1, Poly1(Rational(-1, 2))) +
               ZetaLine::term(0, Poly1(Rational(-1, 12)));
  CHECK(ez2_neg_line_expr(NegArg::second, 1) == b);
  ZetaLine f1 = ZetaLine::term(-1, Poly1(Rational(1))) + ZetaLine::term(0, Poly1(Rational(-1)));
  CHECK(ez2_neg_line_expr(NegArg::first, 0) == f1);
  ZetaLine f2 = ZetaLine::term(-2, Poly1(Rational(1, 2))) + ZetaLine::term(-1, Poly1(Rational(-1, 2)));
  CHECK(ez2_neg_line_expr(NegArg::first, 1) == f2);

  Complex s(2.3, 0.4);
  Complex fa = -riemann_zeta(s - 1.0).value - 0.5 * riemann_zeta(s).value;
  CHECK(close(ez2_neg_args(NegArg::second, s, 0).value, fa, 1e-13));
  // numerically equal to the Mellin-Barnes value on the line
  for (int N = 0; N <= 4; ++N) {
    CHECK(close(ez2_neg_args(NegArg::second, s, N).value, ezl2_continued(Twist(), Twist(), 1, 1, s, -N).value, 1e-9));
    CHECK(close(ez2_neg_args(NegArg::first, s + 3.0, N).value,
                ezl2_continued(Twist(), Twist(), 1, 1, -N, s + 3.0).value, 1e-9));
  }
  CHECK_THROWS_AS(ez2_neg_args(NegArg::second, 2, 0), PoleError);
}

TEST_CASE("line closed forms satisfy the harmonic product") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int N = 0; N <= 4; ++N) {
    for (int i = 0; i < 5; ++i) {
      Complex s(u(rng), u(rng));
      Complex lhs = ez2_neg_args(NegArg::second, s, N).value + ez2_neg_args(NegArg::first, s, N).value;
      Complex rhs = riemann_zeta(s).value * zeta_nonpositive(N).get_d() - riemann_zeta(s - double(N)).value;
      CHECK(close(lhs, rhs, 1e-9));
    }
  }
}

TEST_CASE("desingularized lines") {
  // zeta2^des(s, -3)
  ZetaLine e54 = ZetaLine::term(-3, P({-2, Rational(1, 2)})) + ZetaLine::term(-2, P({Rational(-3, 2), Rational(1, 2)})) +
                 ZetaLine::term(0, P({Rational(1, 30), Rational(-1, 30)}));
  CHECK(ez2_des_neg_line(3) == e54);
  CHECK(ez2_des_neg_line(3).coeff(-3) == P({-2, Rational(1, 2)}));
  // zeta2^des(-1, s): (s-4)(s-3)/12, (s-2)/2, -s(s-1)/12
  ZetaLine e56 = ZetaLine::term(-2, P({1, Rational(-7, 12), Rational(1, 12)})) + ZetaLine::term(-1, P({-1, Rational(1, 2)})) +
                 ZetaLine::term(0, P({0, Rational(1, 12), Rational(-1, 12)}));
  CHECK(ez2_des_neg_line(1, NegArg::first) == e56);
  // N = 0: -(s-1) zeta(s) zeta(0)
  CHECK(ez2_des_neg_line(0) == ZetaLine::term(0, P({Rational(-1, 2), Rational(1, 2)})));
  for (int N = 0; N <= 8; ++N) {
    CHECK(ez2_des_neg_line(N, NegArg::second) == des_second_oracle(N));
    CHECK(ez2_des_neg_line(N, NegArg::first) == des_first_oracle(N));
  }
}

TEST_CASE("exact special values") {
  CHECK(*ez2_des_exact(0, 0) == zv(Rational(1, 4)));
  CHECK(*ez2_des_exact(-1, -1) == zv(Rational(1, 36)));
  CHECK(*ez2_des_exact(0, -2) == zv(Rational(1, 18)));
  CHECK(*ez2_des_exact(1, -3) == zv(Rational(1, 20)));
  CHECK(*ez2_des_exact(-1, 1) == zv(Rational(1, 8)));
  CHECK(*ez2_des_exact(1, 1) == zv(Rational(1, 2)));
  CHECK(*ez2_des_exact(2, -3) == zv(Rational(1, 3), {{2, Rational(-1, 30)}}));
  CHECK(*ez2_des_exact(3, -3) == zv(Rational(3, 4), {{3, Rational(-1, 15)}}));
  CHECK(*ez2_des_exact(4, -3) == zv(Rational(1, 2), {{2, Rational(1, 2)}, {4, Rational(-1, 10)}}));
  CHECK(*ez2_des_exact(-1, 2) == zv(Rational(5, 12), {{2, Rational(-1, 6)}}));
  CHECK(*ez2_des_exact(-1, 3) == zv(Rational(-1, 12), {{2, Rational(1, 2)}, {3, Rational(-1, 2)}}));
  CHECK(*ez2_des_exact(2, 1) == zv(0, {{2, -1}, {3, 2}}));
  CHECK(!ez2_des_exact(3, 2).has_value());
  // both lines agree where they cross, and agree with the generating-function path
  HLData ez = ez_data(2);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      ZetaValue x = ez2_des_neg_line(b, NegArg::second).exact(-a);
      ZetaValue y = ez2_des_neg_line(a, NegArg::first).exact(-b);
      CHECK(x == y);
      CHECK(x.zeta.empty());
      CHECK(x.rational == special_value_nonpos(ez, {a, b}).to_rational());
    }
}

TEST_CASE("numeric dispatch") {
  CHECK(ez2_des(1, 1).value == Complex(0.5, 0));
  CHECK(std::abs(ez2_des(1, -3).value.real() - 0.05) < 1e-14);
  CHECK(std::abs(ez2_des(2, 1).value.real() - (2 * zeta(3) - zeta(2))) < 1e-9);
  CHECK(std::abs(ez2_des(3, 1).value.real() - (2 * zeta(3) - 1.25 * zeta(4))) < 1e-9);
  CHECK(std::abs(ez2_des(4, 1).value.real() - (3 * zeta(4) + 2 * zeta(5) - 2 * zeta(2) * zeta(3))) < 1e-9);
  // (3, 0) via the line agrees with the three-term combination nearby
  Complex line = ez2_des(3, 0).value;
  Complex off = ez2_des(3, Complex(0, 0.01)).value;
  CHECK(std::abs(line - off) < 0.1);
  CHECK(close(line, ez2_des_neg_line(0).eval(3).value, 1e-15));
}

TEST_CASE("exact-line consistency through the three-term path") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.5, 3.5);
  for (int N = 0; N <= 4; ++N) {
    for (int i = 0; i < 4; ++i) {
      Complex s(u(rng), u(rng));
      Complex closed = ez2_des_neg_line(N).eval(s).value;
      Complex via = ez2_des_combination(s, Complex(-N, 0)).value;
      CHECK(close(closed, via, 1e-9));
    }
  }
}

TEST_CASE("entire across hyperplanes") {
  // continuity at (1, 1) from both sides of s1 + s2 = 2
  double prev = 1;
  for (int k = 3; k <= 6; ++k) {
    double d = std::pow(10.0, -k);
    for (double sign : {1.0, -1.0}) {
      double v = ez2_des(1 + sign * d, 1).value.real();
      CHECK(std::abs(v - 0.5) < 2 * d);
    }
    double g = std::abs(ezl2_continued(Twist(), Twist(), 1, 1, 1 + d, 1 + d / 7).value);
    CHECK(g > prev);  // the ordinary zeta2 blows up near the hyperplane
    prev = g;
  }
  // near s2 = 0 the limit matches the line
  Complex near = ez2_des(2.3, Complex(1e-4, 0)).value;
  CHECK(std::abs(near - ez2_des(2.3, 0).value) < 1e-3);
}

TEST_CASE("identity evaluation refuses 0 * pole") {
  DesingIdentity id = desing_identity(ez_data(2));
  CHECK_THROWS_AS(evaluate_identity(id, {Complex(1.7, 0.3), 0}), PoleError);
  // off the line it agrees with the dispatching evaluator
  Complex s(1.7, 0.3), t(0.4, -0.2);
  CHECK(close(evaluate_identity(id, {s, t}).value, ez2_des(s, t).value, 1e-9));
}
