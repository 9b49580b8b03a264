#include "desing/multiple_zeta.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <functional>
#include <map>

#include "desing/coefficients.hpp"
#include "desing/errors.hpp"

namespace desing {

namespace {

constexpr double kEps = 2.220446049250313e-16;
const Complex kI(0.0, 1.0);

bool is_exact_nonneg_integer(const Scalar& x) {
  return x.is_exact() && x.exact().get_den() == 1 && x.exact() >= 0 && x.exact() < 1000000;
}

bool is_nonpositive_integer(Complex s, long* n) {
  if (s.imag() != 0.0 || s.real() > 0.0 || std::floor(s.real()) != s.real()) return false;
  *n = -static_cast<long>(s.real());
  return true;
}

bool is_plain_ez2(const HLData& data) {
  if (data.r != 2 || data.d != 2 || !data.xi[0].is_one() || !data.xi[1].is_one()) return false;
  auto v = as_ezl(data);
  return v && v->gamma[0] == Scalar(1) && v->gamma[1] == Scalar(1);
}

// sum_{n=2}^{N} n^{-s2} H_{n-1}(s1) plus the tail
// zeta(s1) zeta(s2, N+1) - sum_{n > N} n^{-s2} zeta(s1, n), the latter from
// the asymptotic expansion of zeta(s1, n).
NumResult ez2_partial_with_tail(Complex s1, Complex s2, long N, const EvalConfig& cfg) {
  Complex h(0.0, 0.0), sum(0.0, 0.0);
  for (long n = 2; n <= N; ++n) {
    h += std::exp(-s1 * std::log(static_cast<double>(n - 1)));
    sum += std::exp(-s2 * std::log(static_cast<double>(n))) * h;
  }
  const double a = static_cast<double>(N + 1);
  NumResult z1 = riemann_zeta(s1, cfg);
  NumResult z2 = hurwitz_zeta_general(s2, a, cfg);
  Complex tail = z1.value * z2.value;
  double err = std::abs(z1.value) * z2.error_bound + std::abs(z2.value) * z1.error_bound;
  Complex w = s1 + s2;
  NumResult t0 = hurwitz_zeta_general(w - 1.0, a, cfg);
  NumResult t1 = hurwitz_zeta_general(w, a, cfg);
  tail -= t0.value / (s1 - 1.0) + 0.5 * t1.value;
  err += t0.error_bound / std::abs(s1 - 1.0) + t1.error_bound;
  Complex poch = s1;
  for (int k = 1; k <= 10; ++k) {
    Rational bq = bernoulli(2 * k) / Rational(factorial(2 * k));
    NumResult tk = hurwitz_zeta_general(w + (2.0 * k - 1.0), a, cfg);
    Complex term = bq.get_d() * poch * tk.value;
    tail -= term;
    err += std::abs(bq.get_d() * poch) * tk.error_bound;
    if (k == 10) err += std::abs(term);
    poch *= (s1 + 2.0 * k - 1.0) * (s1 + 2.0 * k);
  }
  return {sum + tail, err + kEps * static_cast<double>(N) * std::abs(sum), "direct"};
}

NumResult ez2_direct_accelerated(Complex s1, Complex s2, const EvalConfig& cfg) {
  auto at = [&](Complex a1) {
    NumResult lo = ez2_partial_with_tail(a1, s2, 200, cfg);
    NumResult hi = ez2_partial_with_tail(a1, s2, 400, cfg);
    hi.error_bound += std::abs(hi.value - lo.value);
    return hi;
  };
  if (std::abs(s1 - 1.0) >= 1e-3) return at(s1);
  // The tail formula has cancelling poles at s1 = 1: symmetric limit.
  const double h = 1e-3;
  auto pair = [&](double t) {
    NumResult p = at(s1 + kI * t), m = at(s1 - kI * t);
    return std::make_pair(p.value + m.value, p.error_bound + m.error_bound);
  };
  auto e1 = pair(h), e2 = pair(2 * h);
  NumResult r;
  r.value = (4.0 * e1.first - e2.first) / 6.0;
  r.error_bound = (4.0 * e1.second + e2.second) / 6.0 + 1e-3 * std::abs(e1.first / 2.0 - r.value);
  r.method = "direct";
  return r;
}

struct DirectPlan {
  int d = 0, r = 0;
  bool integer = true;   // all gamma, beta exact non-negative integers
  bool untwisted = true;
  bool real_s = true;
  std::vector<std::vector<Complex>> gamma;
  std::vector<std::vector<long>> igamma;
  std::vector<Complex> beta;
  std::vector<long> ibeta;
  std::vector<Complex> xi;
  std::vector<Complex> s;
};

// Sum over the box [0, N)^r minus [0, Nprev)^r.
Complex box_shell(const DirectPlan& p, long N, long Nprev) {
  std::vector<std::vector<Complex>> xipow(p.r);
  if (!p.untwisted) {
    for (int k = 0; k < p.r; ++k) {
      xipow[k].resize(N);
      Complex x = 1.0;
      for (long m = 0; m < N; ++m) {
        xipow[k][m] = x;
        x *= p.xi[k];
      }
    }
  }
  std::vector<std::vector<Complex>> ctab(p.d);
  std::vector<std::vector<double>> rtab(p.d);
  if (p.integer) {
    for (int j = 0; j < p.d; ++j) {
      long maxl = p.ibeta[j];
      for (int k = 0; k < p.r; ++k) maxl += p.igamma[j][k] * (N - 1);
      if (p.real_s) {
        rtab[j].resize(maxl + 1);
        for (long l = 1; l <= maxl; ++l) rtab[j][l] = std::pow(static_cast<double>(l), -p.s[j].real());
      } else {
        ctab[j].resize(maxl + 1);
        for (long l = 1; l <= maxl; ++l) ctab[j][l] = std::exp(-p.s[j] * std::log(static_cast<double>(l)));
      }
    }
  }
  std::vector<long> m(p.r, 0);
  Complex total(0.0, 0.0);
  double rtotal = 0.0;
  for (;;) {
    bool inner = true;
    for (int k = 0; k < p.r; ++k)
      if (m[k] >= Nprev) inner = false;
    if (!inner) {
      if (p.integer) {
        if (p.real_s) {
          double t = 1.0;
          for (int j = 0; j < p.d; ++j) {
            long l = p.ibeta[j];
            for (int k = 0; k < p.r; ++k) l += p.igamma[j][k] * m[k];
            t *= rtab[j][l];
          }
          if (p.untwisted) {
            rtotal += t;
          } else {
            Complex x = t;
            for (int k = 0; k < p.r; ++k) x *= xipow[k][m[k]];
            total += x;
          }
        } else {
          Complex t = 1.0;
          for (int j = 0; j < p.d; ++j) {
            long l = p.ibeta[j];
            for (int k = 0; k < p.r; ++k) l += p.igamma[j][k] * m[k];
            t *= ctab[j][l];
          }
          if (!p.untwisted)
            for (int k = 0; k < p.r; ++k) t *= xipow[k][m[k]];
          total += t;
        }
      } else {
        Complex lg(0.0, 0.0);
        for (int j = 0; j < p.d; ++j) {
          Complex l = p.beta[j];
          for (int k = 0; k < p.r; ++k) l += p.gamma[j][k] * static_cast<double>(m[k]);
          lg -= p.s[j] * std::log(l);
        }
        Complex t = std::exp(lg);
        if (!p.untwisted)
          for (int k = 0; k < p.r; ++k) t *= xipow[k][m[k]];
        total += t;
      }
    }
    int k = p.r - 1;
    while (k >= 0 && ++m[k] == N) m[k--] = 0;
    if (k < 0) break;
  }
  return total + rtotal;
}

// Runs a backend, prefixing error messages with the term description.
template <class F>
NumResult with_context(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const PoleError& e) {
    throw PoleError(what + ": " + e.what());
  } catch (const RegionError& e) {
    throw RegionError(what + ": " + e.what());
  } catch (const AccuracyError& e) {
    throw AccuracyError(what + ": " + e.what(), e.achieved());
  }
}

Complex pochhammer(Complex s, int l) {
  Complex p = 1.0;
  for (int i = 0; i < l; ++i) p *= s + static_cast<double>(i);
  return p;
}

std::string shift_string(const std::vector<int>& m) {
  std::string out = "zeta(s";
  for (size_t j = 0; j < m.size(); ++j) out += (j ? "," : "") + std::to_string(m[j]);
  return out + ")";
}

}  // namespace

double direct_sum_exponent(const HLData& data, const std::vector<Complex>& s) {
  if (static_cast<int>(s.size()) != data.d) throw ParameterError("need one s_j per linear form");
  double alpha = INFINITY;
  for (unsigned mask = 1; mask < (1u << data.r); ++mask) {
    double sum = 0;
    int size = 0;
    for (int k = 0; k < data.r; ++k)
      if (mask & (1u << k)) ++size;
    for (int j = 0; j < data.d; ++j) {
      bool touches = false;
      for (int k = 0; k < data.r; ++k)
        if ((mask & (1u << k)) && !data.gamma[j][k].is_zero()) touches = true;
      if (touches) sum += s[j].real();
    }
    alpha = std::min(alpha, sum - size);
  }
  return alpha;
}

NumResult hl_zeta_direct(const HLData& data, const std::vector<Complex>& s, const EvalConfig& cfg) {
  data.validate();
  cfg.validate();
  const double alpha = direct_sum_exponent(data, s);
  if (!(alpha > 0))
    throw RegionError("point outside the region of absolute convergence (tail exponent " + std::to_string(alpha) +
                      ")");
  for (const auto& x : data.xi)
    if (std::abs(x.value()) > 1.0 + 1e-15) throw ParameterError("|xi| must be <= 1");
  if (is_plain_ez2(data)) return ez2_direct_accelerated(s[0], s[1], cfg);

  DirectPlan p;
  p.d = data.d;
  p.r = data.r;
  p.s = s;
  for (const auto& z : s)
    if (z.imag() != 0.0) p.real_s = false;
  for (const auto& x : data.xi) {
    p.xi.push_back(x.value());
    if (!x.is_one()) p.untwisted = false;
  }
  for (int j = 0; j < data.d; ++j) {
    p.beta.push_back(data.beta[j].value());
    if (!is_exact_nonneg_integer(data.beta[j]) || data.beta[j].exact() == 0) p.integer = false;
    p.gamma.emplace_back();
    for (int k = 0; k < data.r; ++k) {
      p.gamma[j].push_back(data.gamma[j][k].value());
      if (!is_exact_nonneg_integer(data.gamma[j][k])) p.integer = false;
    }
  }
  if (p.integer) {
    for (int j = 0; j < data.d; ++j) {
      p.ibeta.push_back(data.beta[j].exact().get_num().get_si());
      p.igamma.emplace_back();
      for (int k = 0; k < data.r; ++k) p.igamma[j].push_back(data.gamma[j][k].exact().get_num().get_si());
    }
  }

  const double ratio = std::pow(2.0, alpha) - 1.0;
  long N = 16;
  Complex S = box_shell(p, N, 0);
  Complex prev_value = S, prev_S = S;
  double err = INFINITY;
  Complex value = S;
  bool have_prev_extrap = false;
  for (;;) {
    double next_terms = std::pow(2.0 * static_cast<double>(N), data.r);
    if (next_terms > static_cast<double>(cfg.direct_sum_cap)) break;
    Complex S2 = S + box_shell(p, 2 * N, N);
    N *= 2;
    if (p.untwisted) {
      Complex extrap = S2 + (S2 - S) / ratio;
      if (have_prev_extrap) {
        err = std::abs(extrap - prev_value);
      } else {
        err = std::abs(S2 - S) / ratio;
      }
      prev_value = extrap;
      have_prev_extrap = true;
      value = extrap;
    } else {
      err = std::abs(S2 - S);
      value = S2;
    }
    prev_S = S;
    S = S2;
    if (err <= cfg.tolerance * std::max(1.0, std::abs(value))) break;
  }
  (void)prev_S;
  NumResult r;
  r.value = ensure_finite(value, "hl_zeta_direct");
  r.error_bound = err + kEps * std::pow(static_cast<double>(N), data.r) * std::abs(value);
  r.method = "direct";
  return r;
}

NumResult ezl2_continued(const Twist& xi1, const Twist& xi2, Complex g1, Complex g2, Complex s1, Complex s2,
                         const EvalConfig& cfg) {
  cfg.validate();
  if (!xi1.is_root_of_unity() || !xi2.is_root_of_unity())
    throw ParameterError("ezl2_continued supports root-of-unity twists only");
  if (g1.real() <= 0 || g2.real() <= 0) throw ParameterError("Re gamma_j must be > 0");
  const double eps = cfg.mb_epsilon;
  const double sig2 = s2.real(), sig12 = (s1 + s2).real();
  int M = cfg.mb_M;
  if (M == 0) {
    M = 1;
    while (!(sig2 > -M + eps + 0.5 && sig12 > 1 - M + eps + 0.5)) ++M;
  } else if (!(sig2 > -M + eps && sig12 > 1 - M + eps)) {
    throw RegionError("point outside the Mellin-Barnes region for M = " + std::to_string(M));
  }
  if (M > 150) throw RegionError("point too far left for the Mellin-Barnes evaluator");

  const Complex log_g1 = std::log(g1), log_g2 = std::log(g2);
  auto zeta1 = [&](Complex w) {
    NumResult p = lerch_phi(w, xi1, cfg);
    Complex f = std::exp(-w * log_g1);
    return NumResult{f * p.value, std::abs(f) * p.error_bound, ""};
  };

  Complex total(0.0, 0.0);
  double err = 0.0;
  if (xi2.is_one()) {
    if (s2 == Complex(1.0, 0.0)) throw PoleError("singular hyperplane s_2 = 1");
    Complex w = s1 + s2 - 1.0;
    if (xi1.is_one() && w == Complex(1.0, 0.0)) throw PoleError("singular hyperplane s_1 + s_2 = 2");
    NumResult z = zeta1(w);
    Complex coef = 1.0 / (g2 * (s2 - 1.0));
    total += coef * z.value;
    err += std::abs(coef) * z.error_bound;
  }

  long n2 = 0;
  const bool s2_nonpos = is_nonpositive_integer(s2, &n2);
  Complex binom = 1.0;  // binom(-s2, k)
  for (int k = 0; k < M; ++k) {
    if (k > 0) binom *= -(s2 + static_cast<double>(k - 1)) / static_cast<double>(k);
    if (s2_nonpos && k > n2) continue;  // binom(-s2, k) vanishes identically in s1
    Complex phi;
    if (xi2.is_one()) {
      Rational q = zeta_nonpositive(k);
      if (q == 0) continue;
      phi = q.get_d();
    } else {
      CyclotomicNumber c = lerch_neg_coeff(k, xi2.exact());
      if (k == 0) c = c - CyclotomicNumber(Rational(1));
      if (c.is_zero()) continue;
      phi = c.to_complex();
    }
    Complex w = s1 + s2 + static_cast<double>(k);
    if (xi1.is_one() && w == Complex(1.0, 0.0))
      throw PoleError("singular hyperplane s_1 + s_2 = " + std::to_string(1 - k));
    NumResult z = zeta1(w);
    Complex coef = binom * std::exp(static_cast<double>(k) * log_g2) * phi;
    total += coef * z.value;
    err += std::abs(coef) * z.error_bound;
  }

  NumResult r;
  r.method = "mb";
  if (s2_nonpos) {  // 1/Gamma(s2) = 0
    r.value = total;
    r.error_bound = err;
    return r;
  }

  const double c = M - eps;
  const Complex lg_s2 = log_gamma(s2);
  auto integrand = [&](double t) {
    Complex z(c, t);
    Complex lg = log_gamma(s2 + z) + log_gamma(-z) - lg_s2 + z * log_g2;
    return std::exp(lg) * zeta1(s1 + s2 + z).value * lerch_phi(-z, xi2, cfg).value;
  };
  using GL = boost::math::quadrature::gauss<double, 20>;
  const auto& x = GL::abscissa();
  const auto& w = GL::weights();
  auto gl = [&](double a, double b, double* mag) {
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    Complex sum(0.0, 0.0);
    for (size_t i = 0; i < x.size(); ++i) {
      Complex f1 = integrand(mid + half * x[i]), f2 = integrand(mid - half * x[i]);
      sum += w[i] * (f1 + f2);
      *mag += w[i] * half * (std::abs(f1) + std::abs(f2));
    }
    return half * sum;
  };
  const double h = 0.5;
  double mag = 0.0, quad_err = 0.0;
  auto panel = [&](long i, double tc) {
    double a = tc + h * static_cast<double>(i), b = a + h, m = 0.5 * (a + b);
    double dummy = 0.0;
    Complex coarse = gl(a, b, &dummy);
    Complex fine = gl(a, m, &mag) + gl(m, b, &mag);
    quad_err += std::abs(fine - coarse);
    return fine;
  };

  const double tc = -0.5 * s2.imag();
  double T0 = cfg.mb_line_halflength > 0 ? cfg.mb_line_halflength
                                          : 8.0 + std::abs(s2.imag()) + std::abs((s1 + s2).imag());
  long n = static_cast<long>(std::ceil(T0 / h));
  Complex integral(0.0, 0.0);
  for (long i = -n; i < n; ++i) integral += panel(i, tc);
  const double two_pi = 2.0 * M_PI;
  double last = 0.0;
  for (;;) {
    // outermost panel on each side
    Complex lo = panel(-n - 1, tc), hi = panel(n, tc);
    integral += lo + hi;
    last = (std::abs(lo) + std::abs(hi)) / two_pi;
    double scale = std::max(1.0, std::abs(total + integral / two_pi));
    if (last < cfg.tolerance * scale / 10.0) break;
    if (n > 4096) {
      throw AccuracyError("Mellin-Barnes line truncation did not converge", last);
    }
    long n2x = 2 * n;
    for (long i = n + 1; i < n2x; ++i) integral += panel(i, tc) + panel(-i - 1, tc);
    n = n2x;
  }
  Complex Z = integral / two_pi;
  r.value = ensure_finite(total + Z, "ezl2_continued");
  r.error_bound = err + (quad_err + 8.0 * kEps * mag) / two_pi + last;
  if (r.error_bound > cfg.tolerance * std::max(1.0, std::abs(r.value)))
    throw AccuracyError("Mellin-Barnes evaluation did not reach the tolerance", r.error_bound);
  return r;
}

NumResult hl_zeta(const HLData& data, const std::vector<Complex>& s, const EvalConfig& cfg) {
  if (static_cast<int>(s.size()) != data.d) throw ParameterError("need one s_j per linear form");
  if (data.r == 2 && data.d == 2 && data.xi[0].is_root_of_unity() && data.xi[1].is_root_of_unity()) {
    if (auto v = as_ezl(data)) {
      NumResult r = ezl2_continued(v->xi[0], v->xi[1], v->gamma[0].value(), v->gamma[1].value(), s[0], s[1], cfg);
      // The HL series starts at m = 0, the EZL series at m = 1.
      r.value /= v->xi[0].value() * v->xi[1].value();
      return r;
    }
  }
  return hl_zeta_direct(data, s, cfg);
}

NumResult evaluate_identity(const DesingIdentity& id, const std::vector<Complex>& s, const EvalConfig& cfg) {
  const int d = id.base.d;
  if (static_cast<int>(s.size()) != d) throw ParameterError("need one s_j per linear form");
  NumResult out{Complex(0.0, 0.0), 0.0, ""};
  std::map<std::vector<int>, NumResult> cache;
  for (const auto& term : id.terms) {
    Complex coef = term.alpha.get_d();
    for (int j = 0; j < d; ++j) coef *= pochhammer(s[j], term.l[j]);
    auto it = cache.find(term.m);
    if (coef == Complex(0.0, 0.0)) {
      // 0 * pole has no value here; a limit is needed
      if (it == cache.end()) {
        std::vector<Complex> point(s);
        for (int j = 0; j < d; ++j) point[j] += static_cast<double>(term.m[j]);
        try {
          cache.emplace(term.m, hl_zeta(id.base, point, cfg));
        } catch (const PoleError& e) {
          throw PoleError("term " + shift_string(term.m) + ": vanishing coefficient times a pole (" + e.what() +
                          "); take a limit instead");
        }
      }
      continue;
    }
    if (it == cache.end()) {
      std::vector<Complex> point(s);
      for (int j = 0; j < d; ++j) point[j] += static_cast<double>(term.m[j]);
      NumResult v = with_context("term " + shift_string(term.m), [&] { return hl_zeta(id.base, point, cfg); });
      it = cache.emplace(term.m, v).first;
      if (out.method.empty()) out.method = v.method;
    }
    out.value += coef * it->second.value;
    out.error_bound += std::abs(coef) * it->second.error_bound;
  }
  return out;
}

TrivialResiduals verify_trivial_relations(const std::vector<Complex>& s, const EvalConfig& cfg) {
  if (s.size() != 3) throw ParameterError("trivial relations need (s1, s2, s3)");
  const HLData data = mt2_data().data;
  EvalConfig tight = cfg;
  tight.tolerance = std::min(cfg.tolerance, 1e-13);
  std::map<std::vector<int>, Complex> cache;
  auto residual = [&](const TrivialRelation& rel) {
    Complex sum(0.0, 0.0);
    for (const auto& term : rel.terms) {
      Complex coef = term.alpha.get_d();
      for (int j = 0; j < 3; ++j) coef *= pochhammer(s[j], term.l[j]);
      auto it = cache.find(term.m);
      if (it == cache.end()) {
        std::vector<Complex> point(s);
        for (int j = 0; j < 3; ++j) point[j] += static_cast<double>(term.m[j]);
        NumResult v =
            with_context("term " + shift_string(term.m), [&] { return hl_zeta_direct(data, point, tight); });
        it = cache.emplace(term.m, v.value).first;
      }
      sum += coef * it->second;
    }
    return std::abs(sum);
  };
  TrivialResiduals out;
  for (const auto& rel : trivial_relation_terms(data)) {
    double v = residual(rel);
    if (rel.name == "a") out.relation_a = v;
    else if (rel.name == "b") out.relation_b = v;
    else out.relation_ab = v;
  }
  return out;
}

}  // namespace desing
