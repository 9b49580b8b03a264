#include "desing/ez2.hpp"

#include <cmath>
#include <sstream>

#include "desing/coefficients.hpp"
#include "desing/errors.hpp"

namespace desing {

namespace {

bool as_integer(Complex s, long* n) {
  if (s.imag() != 0.0 || std::floor(s.real()) != s.real() || std::abs(s.real()) > 1e9) return false;
  *n = static_cast<long>(s.real());
  return true;
}

std::string zeta_arg(int shift) {
  if (shift == 0) return "zeta(s)";
  return "zeta(s" + std::string(shift > 0 ? "+" : "-") + std::to_string(std::abs(shift)) + ")";
}

Complex combine(const NumResult& r, Complex coef, double* err) {
  *err += std::abs(coef) * r.error_bound;
  return coef * r.value;
}

// zeta_2^des through the three-term combination, no special-line handling.
NumResult des_generic(Complex s1, Complex s2, const EvalConfig& cfg) {
  const Complex c1 = (s1 - 1.0) * (s2 - 1.0);
  const Complex c2 = s2 * (s2 + 1.0 - s1);
  const Complex c3 = -s2 * (s2 + 1.0);
  NumResult out{Complex(0.0, 0.0), 0.0, "mb"};
  if (c1 != Complex(0.0, 0.0)) out.value += combine(ez2_value(s1, s2, cfg), c1, &out.error_bound);
  if (c2 != Complex(0.0, 0.0)) out.value += combine(ez2_value(s1 - 1.0, s2 + 1.0, cfg), c2, &out.error_bound);
  if (c3 != Complex(0.0, 0.0)) out.value += combine(ez2_value(s1 - 2.0, s2 + 2.0, cfg), c3, &out.error_bound);
  return out;
}

// Symmetric 4-point Richardson limit along direction v.
NumResult des_limit(Complex s1, Complex s2, const EvalConfig& cfg) {
  const double h0 = 0.005;
  const Complex I(0.0, 1.0);
  const std::vector<std::pair<Complex, Complex>> dirs = {{0.0, I}, {I, I}, {-I, 2.0 * I}, {I, 0.0}};
  std::pair<Complex, Complex> best = dirs[0];
  double best_d = -1;
  for (const auto& v : dirs) {
    double d = INFINITY;
    for (double t : {-2 * h0, -h0, -h0 / 2, h0 / 2, h0, 2 * h0})
      d = std::min(d, ez2_des_singular_distance(s1 + t * v.first, s2 + t * v.second));
    if (d > best_d) {
      best_d = d;
      best = v;
    }
  }
  double err = 0.0;
  auto E = [&](double t) {
    NumResult p = des_generic(s1 + t * best.first, s2 + t * best.second, cfg);
    NumResult m = des_generic(s1 - t * best.first, s2 - t * best.second, cfg);
    err += p.error_bound + m.error_bound;
    return p.value + m.value;
  };
  Complex e_half = E(h0 / 2), e1 = E(h0), e2 = E(2 * h0);
  Complex r1 = (4.0 * e1 - e2) / 6.0;
  Complex r_half = (4.0 * e_half - e1) / 6.0;
  return {r_half, std::abs(r1 - r_half) / 15.0 + err, "limit"};
}

}  // namespace

double ZetaValue::value() const {
  double v = rational.get_d();
  for (const auto& [k, c] : zeta) v += c.get_d() * riemann_zeta(static_cast<double>(k)).value.real();
  return v;
}

std::string ZetaValue::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (rational != 0 || zeta.empty()) {
    os << rational;
    first = false;
  }
  for (const auto& [k, c] : zeta) {
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (a != 1) os << a << "*";
    os << "zeta(" << k << ")";
    first = false;
  }
  return os.str();
}

ZetaValue& ZetaValue::operator+=(const ZetaValue& o) {
  rational += o.rational;
  for (const auto& [k, c] : o.zeta) {
    Rational v = zeta[k] + c;
    if (v == 0) zeta.erase(k);
    else zeta[k] = v;
  }
  return *this;
}

ZetaValue operator*(const Rational& q, const ZetaValue& a) {
  ZetaValue r;
  if (q == 0) return r;
  r.rational = q * a.rational;
  for (const auto& [k, c] : a.zeta) r.zeta[k] = q * c;
  return r;
}

ZetaLine ZetaLine::term(int shift, const Poly1& p) {
  ZetaLine e;
  e.add(shift, p);
  return e;
}

void ZetaLine::add(int shift, const Poly1& p) {
  Poly1 sum = coeff(shift) + p;
  if (sum.is_zero()) terms_.erase(shift);
  else terms_[shift] = sum;
}

Poly1 ZetaLine::coeff(int shift) const {
  auto it = terms_.find(shift);
  return it == terms_.end() ? Poly1() : it->second;
}

ZetaLine ZetaLine::shifted(int b) const {
  ZetaLine e;
  for (const auto& [a, p] : terms_) e.add(a + b, p.shifted(b));
  return e;
}

ZetaLine& ZetaLine::operator+=(const ZetaLine& o) {
  for (const auto& [a, p] : o.terms_) add(a, p);
  return *this;
}

ZetaLine operator*(const Poly1& p, const ZetaLine& e) {
  ZetaLine r;
  for (const auto& [a, q] : e.terms_) r.add(a, p * q);
  return r;
}

NumResult ZetaLine::eval(Complex s, const EvalConfig& cfg) const {
  NumResult out{Complex(0.0, 0.0), 0.0, "closed-form"};
  for (const auto& [a, p] : terms_) {
    Complex w = s + static_cast<double>(a);
    Rational root = 1 - a;
    if (p(root) == 0 && std::abs(w - 1.0) < 0.5) {
      Poly1 q = p.divide_root(root);
      out.value += combine(zeta_pole_removed(w, cfg), q(s), &out.error_bound);
    } else {
      if (w == Complex(1.0, 0.0)) throw PoleError("pole of " + zeta_arg(a) + " at s = " + desing::to_string(root));
      out.value += combine(riemann_zeta(w, cfg), p(s), &out.error_bound);
    }
  }
  return out;
}

ZetaValue ZetaLine::exact(long s) const {
  ZetaValue out;
  for (const auto& [a, p] : terms_) {
    long w = s + a;
    Rational ps = p(Rational(s));
    if (w <= 0) {
      out.rational += ps * zeta_nonpositive(static_cast<int>(-w));
    } else if (w >= 2) {
      ZetaValue z;
      z.zeta[static_cast<int>(w)] = 1;
      out += ps * z;
    } else {
      if (ps != 0) throw PoleError("pole of " + zeta_arg(a) + " at s = " + std::to_string(s));
      // P(s') zeta(s'+a) = Q(s') (s'-s) zeta(1 + (s'-s)) -> Q(s)
      out.rational += p.divide_root(Rational(s))(Rational(s));
    }
  }
  return out;
}

std::string ZetaLine::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, p] : terms_) {
    if (!first) os << " + ";
    os << "(" << p.to_string() << ")*" << zeta_arg(a);
    first = false;
  }
  return os.str();
}

ZetaLine ez2_neg_line_expr(NegArg which, int N) {
  if (N < 0) throw ParameterError("N must be non-negative");
  ZetaLine e = ZetaLine::term(-N - 1, Poly1(Rational(-1, N + 1)));
  for (int k = 0; k <= N; ++k) e += ZetaLine::term(k - N, Poly1(binomial(N, k) * zeta_nonpositive(k)));
  if (which == NegArg::second) return e;
  // zeta2(-N, s) = zeta(s) zeta(-N) - zeta(s - N) - zeta2(s, -N)
  ZetaLine f = Poly1(Rational(-1)) * e;
  f += ZetaLine::term(0, Poly1(zeta_nonpositive(N)));
  f += ZetaLine::term(-N, Poly1(Rational(-1)));
  return f;
}

NumResult ez2_neg_args(NegArg which, Complex s, int N, const EvalConfig& cfg) {
  return ez2_neg_line_expr(which, N).eval(s, cfg);
}

ZetaLine ez2_des_neg_line(int N, NegArg which) {
  if (N < 0) throw ParameterError("N must be non-negative");
  const Poly1 s = Poly1::s();
  ZetaLine e;
  if (which == NegArg::second) {
    for (int k = 0; k <= N; ++k) {
      Rational c = -binomial(N, k) * (k + 1) * zeta_nonpositive(k);
      e += ZetaLine::term(k - N, Poly1(c) * Poly1::linear(Rational(k - N - 1)));
    }
    return e;
  }
  e += ZetaLine::term(-N - 1, Poly1(Rational(1, (N + 3) * (N + 2))) * Poly1::linear(Rational(-N - 3)) *
                                  Poly1::linear(Rational(-N - 2)));
  for (int k = 0; k <= N + 1; ++k) {
    Poly1 ks = Poly1(std::vector<Rational>{Rational(N - k + 2), Rational(k)});  // k s + N - k + 2
    Rational c = binomial(N + 2, k) * zeta_nonpositive(k) / (N + 2);
    e += ZetaLine::term(k - N, Poly1(c) * ks * Poly1::linear(Rational(k - N - 1)));
  }
  e += ZetaLine::term(0, Poly1(Rational(-(N + 1)) * zeta_nonpositive(N)) * Poly1::linear(-1));
  e += ZetaLine::term(1, Poly1(zeta_nonpositive(N + 1)) * s * Poly1::linear(Rational(N + 1)));
  e += ZetaLine::term(-N, Poly1::linear(Rational(-N - 1)));
  return e;
}

NumResult ez2_value(Complex s1, Complex s2, const EvalConfig& cfg) {
  if (s2.real() > 1.2 && (s1 + s2).real() > 2.2) {
    static const HLData ez = ez_data(2);
    return hl_zeta_direct(ez, {s1, s2}, cfg);
  }
  return ezl2_continued(Twist(), Twist(), 1.0, 1.0, s1, s2, cfg);
}

double ez2_des_singular_distance(Complex s1, Complex s2) {
  double d = INFINITY;
  for (double c : {1.0, 0.0, -1.0}) d = std::min(d, std::abs(s2 - c));
  Complex w = s1 + s2;
  for (double c : {2.0, 1.0, 0.0}) d = std::min(d, std::abs(w - c));
  double even = 2.0 * std::round(w.real() / 2.0);
  for (double c : {even - 2.0, even, even + 2.0})
    if (c <= -2.0) d = std::min(d, std::abs(w - c));
  return d;
}

NumResult ez2_des(Complex s1, Complex s2, const EvalConfig& cfg) {
  cfg.validate();
  long n1 = 0, n2 = 0;
  const bool int1 = as_integer(s1, &n1), int2 = as_integer(s2, &n2);
  if (int2 && n2 <= 0) return ez2_des_neg_line(static_cast<int>(-n2), NegArg::second).eval(s1, cfg);
  if (int1 && n1 <= 0) return ez2_des_neg_line(static_cast<int>(-n1), NegArg::first).eval(s2, cfg);
  if (int1 && int2 && n1 == 1 && n2 == 1) return {Complex(0.5, 0.0), 0.0, "exact"};
  if (int1 && int2 && n2 == 1 && n1 >= 2) {
    const double N = static_cast<double>(n1);
    NumResult out{Complex(0.0, 0.0), 0.0, "closed-form"};
    out.value += combine(riemann_zeta(N, cfg), N - 1.0, &out.error_bound);
    if (n1 != 2) out.value += combine(ez2_value(N - 1.0, 2.0, cfg), 2.0 - N, &out.error_bound);
    out.value += combine(ez2_value(N - 2.0, 3.0, cfg), -2.0, &out.error_bound);
    return out;
  }
  return ez2_des_combination(s1, s2, cfg);
}

NumResult ez2_des_combination(Complex s1, Complex s2, const EvalConfig& cfg) {
  if (ez2_des_singular_distance(s1, s2) < 1e-3) return des_limit(s1, s2, cfg);
  return des_generic(s1, s2, cfg);
}

std::optional<ZetaValue> ez2_des_exact(long s1, long s2) {
  if (s2 <= 0) return ez2_des_neg_line(static_cast<int>(-s2), NegArg::second).exact(s1);
  if (s1 <= 0) return ez2_des_neg_line(static_cast<int>(-s1), NegArg::first).exact(s2);
  if (s1 == 1 && s2 == 1) return ZetaValue{Rational(1, 2), {}};
  if (s1 == 2 && s2 == 1) {
    // zeta(2) - 2 zeta2(0, 3), zeta2(0, s) from the first-argument line
    ZetaValue z2;
    z2.zeta[2] = 1;
    return z2 + Rational(-2) * ez2_neg_line_expr(NegArg::first, 0).exact(3);
  }
  return std::nullopt;
}

}  // namespace desing
