#include "desing/special_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <vector>

#include "desing/coefficients.hpp"
#include "desing/errors.hpp"

namespace desing {

namespace {

constexpr double kEps = 2.220446049250313e-16;
const Complex kI(0.0, 1.0);

// B_{2k} / (2k)! as doubles, k = 0..kMaxB.
constexpr int kMaxB = 60;
const std::vector<double>& bernoulli_over_factorial() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kMaxB + 2);
    for (int k = 0; k <= kMaxB + 1; ++k) {
      Rational q = bernoulli(2 * k) / Rational(factorial(2 * k));
      t[k] = q.get_d();
    }
    return t;
  }();
  return table;
}

bool is_nonpositive_integer(Complex s, long* k = nullptr) {
  if (s.imag() != 0.0 || s.real() > 0.0 || s.real() < -1e6) return false;
  if (std::floor(s.real()) != s.real()) return false;
  if (k) *k = -static_cast<long>(s.real());
  return true;
}

// (e^u - 1)/u
Complex expm1_over(Complex u) {
  if (std::abs(u) < 0.1) {
    Complex term(1.0, 0.0), sum(1.0, 0.0);
    for (int n = 2; n < 20; ++n) {
      term *= u / static_cast<double>(n);
      sum += term;
    }
    return sum;
  }
  return (std::exp(u) - 1.0) / u;
}

// Euler-Maclaurin for sum_{n >= 0} (n + a)^{-s}; regular = true drops the
// 1/(s - 1) pole part.
NumResult hurwitz_em(Complex s, double a, bool regular, const EvalConfig& cfg) {
  if (!(a > 0.0)) throw ParameterError("Hurwitz parameter must be positive");
  if (!regular && s == Complex(1.0, 0.0)) throw PoleError("zeta(s, a) has a pole at s = 1");
  const auto& bf = bernoulli_over_factorial();
  int mb = std::min(cfg.em_bernoulli_order, kMaxB);
  double target = std::max(static_cast<double>(cfg.em_terms), std::abs(s) + 10.0);
  long nexp = std::max(0L, static_cast<long>(std::ceil(target - a)));

  Complex sum(0.0, 0.0);
  double mag = 0.0;
  for (long n = 0; n < nexp; ++n) {
    Complex t = std::exp(-s * std::log(static_cast<double>(n) + a));
    sum += t;
    mag = std::max(mag, std::abs(t));
  }
  double x = static_cast<double>(nexp) + a;
  double lx = std::log(x);
  Complex xs = std::exp(-s * lx);  // x^{-s}
  Complex tail;
  if (regular) {
    tail = -lx * expm1_over((1.0 - s) * lx);
  } else {
    tail = x * xs / (s - 1.0);
  }
  tail += 0.5 * xs;
  mag = std::max({mag, std::abs(tail)});
  // B_{2k}/(2k)! (s)_{2k-1} x^{-s-2k+1}
  Complex poch = s;
  Complex xp = xs / x;
  Complex last;
  for (int k = 1; k <= mb + 1; ++k) {
    Complex term = bf[k] * poch * xp;
    if (k == mb + 1) {
      last = term;
      break;
    }
    tail += term;
    double dk = 2.0 * k;
    poch *= (s + dk - 1.0) * (s + dk);
    xp /= x * x;
  }
  NumResult r;
  r.value = sum + tail;
  r.error_bound = std::abs(last) + 4.0 * kEps * (mag * static_cast<double>(nexp + 1) + std::abs(r.value));
  r.method = "em";
  return r;
}

}  // namespace

EvalConfig EvalConfig::from_env() {
  EvalConfig cfg;
  if (const char* t = std::getenv("DESING_TOLERANCE")) {
    char* end = nullptr;
    double v = std::strtod(t, &end);
    if (end == t || *end != '\0' || !(v > 0.0)) throw ParameterError("DESING_TOLERANCE must be a positive number");
    cfg.tolerance = v;
  }
  return cfg;
}

void EvalConfig::validate() const {
  if (em_terms <= 0 || em_bernoulli_order <= 0 || mb_M < 0 || !(mb_epsilon > 0.0) || mb_epsilon >= 1.0 ||
      mb_line_halflength < 0 || direct_sum_cap <= 0 || !(tolerance > 0.0))
    throw ParameterError("invalid evaluation config");
}

Complex ensure_finite(Complex z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw AccuracyError(std::string("non-finite value in ") + what, INFINITY);
  return z;
}

Complex log_sin(Complex z) {
  if (std::abs(z.imag()) < 20.0) return std::log(std::sin(z));
  if (z.imag() > 0) return -kI * z + std::log(0.5 * kI) + std::log(1.0 - std::exp(2.0 * kI * z));
  return kI * z + std::log(-0.5 * kI) + std::log(1.0 - std::exp(-2.0 * kI * z));
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a non-positive integer");
  if (z.real() < 0.5) return std::log(M_PI) - log_sin(M_PI * z) - log_gamma(1.0 - z);
  Complex acc(0.0, 0.0);
  while (std::abs(z) < 15.0) {
    acc += std::log(z);
    z += 1.0;
  }
  const auto& bf = bernoulli_over_factorial();
  Complex r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * M_PI);
  Complex zi = 1.0 / z, zi2 = zi * zi, zp = zi;
  for (int k = 1; k <= 12; ++k) {
    // B_{2k} / (2k (2k-1)) = bf[k] * (2k-2)!
    double c = bf[k];
    for (int j = 2; j <= 2 * k - 2; ++j) c *= j;
    r += c * zp;
    zp *= zi2;
  }
  return r - acc;
}

NumResult hurwitz_zeta_general(Complex s, double a, const EvalConfig& cfg) {
  NumResult r = hurwitz_em(s, a, false, cfg);
  ensure_finite(r.value, "hurwitz_zeta");
  return r;
}

NumResult hurwitz_zeta(Complex s, double a, const EvalConfig& cfg) {
  if (!(a > 0.0 && a <= 1.0)) throw ParameterError("hurwitz_zeta requires a in (0, 1]");
  return hurwitz_zeta_general(s, a, cfg);
}

NumResult hurwitz_zeta_regular(Complex s, double a, const EvalConfig& cfg) {
  NumResult r = hurwitz_em(s, a, true, cfg);
  ensure_finite(r.value, "hurwitz_zeta_regular");
  return r;
}

NumResult riemann_zeta(Complex s, const EvalConfig& cfg) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta(s) has a pole at s = 1");
  long k = 0;
  if (is_nonpositive_integer(s, &k) && k <= 400) return {Complex(zeta_nonpositive(static_cast<int>(k)).get_d(), 0.0), 0.0, "exact"};
  if (s.real() >= 0.5) return hurwitz_zeta_general(s, 1.0, cfg);
  NumResult reflected = hurwitz_zeta_general(1.0 - s, 1.0, cfg);
  Complex lf = s * std::log(2.0) + (s - 1.0) * std::log(M_PI) + log_sin(0.5 * M_PI * s) + log_gamma(1.0 - s);
  Complex f = std::exp(lf);
  NumResult r;
  r.value = ensure_finite(f * reflected.value, "riemann_zeta");
  r.error_bound = std::abs(f) * reflected.error_bound + 8.0 * kEps * (1.0 + std::abs(lf)) * std::abs(r.value);
  r.method = "em";
  return r;
}

NumResult zeta_pole_removed(Complex w, const EvalConfig& cfg) {
  if (std::abs(w - 1.0) >= 0.5) {
    NumResult z = riemann_zeta(w, cfg);
    return {z.value * (w - 1.0), z.error_bound * std::abs(w - 1.0), z.method};
  }
  NumResult reg = hurwitz_zeta_regular(w, 1.0, cfg);
  return {(w - 1.0) * reg.value + 1.0, reg.error_bound * std::abs(w - 1.0), "em"};
}

NumResult lerch_phi(Complex s, const Twist& xi, const EvalConfig& cfg) {
  if (xi.is_one()) return riemann_zeta(s, cfg);
  if (!xi.is_root_of_unity()) {
    Complex x = xi.value();
    double ax = std::abs(x);
    if (ax > 0.95) throw ParameterError("lerch_phi: non-root-of-unity twist needs |xi| <= 0.95");
    Complex sum(0.0, 0.0), xp = 1.0;
    double last = 0.0;
    for (long m = 1; m < 100000; ++m) {
      xp *= x;
      Complex t = xp * std::exp(-s * std::log(static_cast<double>(m)));
      sum += t;
      last = std::abs(t);
      if (last < cfg.tolerance * 1e-3 * std::max(1.0, std::abs(sum)) && m > 5) break;
    }
    return {ensure_finite(sum, "lerch_phi"), last / (1.0 - ax) + kEps * std::abs(sum), "direct"};
  }
  long k = 0;
  if (is_nonpositive_integer(s, &k) && k <= 200) {
    CyclotomicNumber v = lerch_neg_coeff(static_cast<int>(k), xi.exact());
    if (k == 0) v = v - CyclotomicNumber(Rational(1));
    return {v.to_complex(), 0.0, "exact"};
  }
  const int c = xi.order();
  const long a = xi.power();
  NumResult r;
  r.method = "em";
  if (s.real() >= 0.5 || std::abs(s) < 0.5) {
    Complex sum(0.0, 0.0);
    double err = 0.0;
    for (int j = 1; j <= c; ++j) {
      NumResult h = hurwitz_zeta_regular(s, static_cast<double>(j) / c, cfg);
      sum += std::polar(1.0, 2.0 * M_PI * static_cast<double>(a * j % c) / c) * h.value;
      err += h.error_bound;
    }
    Complex cs = std::exp(-s * std::log(static_cast<double>(c)));
    r.value = ensure_finite(cs * sum, "lerch_phi");
    r.error_bound = std::abs(cs) * err;
    return r;
  }
  // Functional equation with theta = a/c in (0, 1).
  double theta = static_cast<double>(a) / c;
  Complex w = 1.0 - s;
  NumResult h1 = hurwitz_zeta(w, theta, cfg);
  NumResult h2 = hurwitz_zeta(w, 1.0 - theta, cfg);
  Complex base = log_gamma(w) - w * std::log(2.0 * M_PI);
  Complex f1 = std::exp(base + 0.5 * M_PI * kI * w);
  Complex f2 = std::exp(base - 0.5 * M_PI * kI * w);
  r.value = ensure_finite(f1 * h1.value + f2 * h2.value, "lerch_phi");
  r.error_bound = std::abs(f1) * h1.error_bound + std::abs(f2) * h2.error_bound +
                  8.0 * kEps * (1.0 + std::abs(base)) * (std::abs(f1 * h1.value) + std::abs(f2 * h2.value));
  return r;
}

}  // namespace desing
