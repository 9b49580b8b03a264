#include "desing/padic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "desing/coefficients.hpp"
#include "desing/errors.hpp"

namespace desing {

namespace {

// Dense coefficient box for exponents 0..n_j in each variable (ordinary
// coefficients). Index is mixed radix with t_1 fastest.
struct Box {
  std::vector<int> dims;
  std::vector<CyclotomicNumber> c;

  explicit Box(const std::vector<int>& n) {
    size_t size = 1;
    for (int k : n) {
      dims.push_back(k + 1);
      size *= static_cast<size_t>(k + 1);
    }
    c.assign(size, CyclotomicNumber(0));
  }

  std::vector<int> exponents(size_t idx) const {
    std::vector<int> e(dims.size());
    for (size_t j = 0; j < dims.size(); ++j) {
      e[j] = static_cast<int>(idx % dims[j]);
      idx /= dims[j];
    }
    return e;
  }

  size_t index(const std::vector<int>& e) const {
    size_t idx = 0;
    for (size_t j = dims.size(); j-- > 0;) idx = idx * dims[j] + e[j];
    return idx;
  }

  Box operator*(const Box& o) const {
    Box out(*this);
    for (auto& v : out.c) v = CyclotomicNumber(0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      auto ei = exponents(i);
      for (size_t k = 0; k < o.c.size(); ++k) {
        if (o.c[k].is_zero()) continue;
        auto ek = o.exponents(k);
        bool fits = true;
        for (size_t j = 0; j < dims.size() && fits; ++j) {
          ek[j] += ei[j];
          fits = ek[j] < dims[j];
        }
        if (fits) out.c[out.index(ek)] += c[i] * o.c[k];
      }
    }
    return out;
  }
};

Rational inv_factorial(int k) { return Rational(1) / Rational(factorial(k)); }

// Factor j as a series in t_j..t_r: sum_k a_k y^k/k! with y^k/k! = sum prod t^e/e!.
Box factor_series(const std::vector<int>& n, size_t j, const CyclotomicNumber& xi, bool first) {
  Box b(n);
  for (size_t idx = 0; idx < b.c.size(); ++idx) {
    auto e = b.exponents(idx);
    bool in_range = true;
    for (size_t v = 0; v < j; ++v) in_range = in_range && e[v] == 0;
    if (!in_range) continue;
    int k = 0;
    Rational w(1);
    for (size_t v = j; v < e.size(); ++v) {
      k += e[v];
      w *= inv_factorial(e[v]);
    }
    CyclotomicNumber a = lerch_neg_coeff(k, xi);
    if (first && k == 0) a -= CyclotomicNumber(1);  // xi e^y/(1 - xi e^y) = 1/(1 - xi e^y) - 1
    b.c[idx] = CyclotomicNumber(w) * a;
  }
  return b;
}

std::mutex g_cache_mutex;
std::map<std::string, CyclotomicNumber> g_cache;

std::string cache_key(const TwistedBernoulliKey& key) {
  std::string s;
  for (int k : key.n) s += std::to_string(k) + ",";
  s += "|";
  for (const auto& x : key.xi) s += x.key() + ";";
  return s;
}

}  // namespace

CyclotomicNumber twisted_multi_bernoulli(const TwistedBernoulliKey& key) {
  const size_t r = key.n.size();
  if (r == 0 || key.xi.size() != r) throw ParameterError("twisted Bernoulli key: n and xi must have the same positive length");
  for (int k : key.n)
    if (k < 0) throw ParameterError("twisted Bernoulli key: negative index");
  for (size_t j = 0; j < r; ++j)
    if (key.xi[j].is_one()) throw ParameterError("degenerate factor: xi_" + std::to_string(j + 1) + " = 1");

  const std::string ck = cache_key(key);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_cache.find(ck);
    if (it != g_cache.end()) return it->second;
  }
  Box prod = factor_series(key.n, 0, key.xi[0], true);
  for (size_t j = 1; j < r; ++j) prod = prod * factor_series(key.n, j, key.xi[j], false);
  CyclotomicNumber v = prod.c[prod.index(key.n)];
  Integer scale = 1;
  for (int k : key.n) scale *= factorial(k);
  v *= CyclotomicNumber(Rational(scale));

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(ck, v);
  return v;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void PadicLRequest::validate() const {
  if (n.empty()) throw ParameterError("p-adic request: empty index vector");
  for (int k : n)
    if (k < 0) throw ParameterError("p-adic request: indices must be non-negative");
  if (c <= 1) throw ParameterError("p-adic request: c must exceed 1");
  if (!is_prime(p)) throw ParameterError("p-adic request: p = " + std::to_string(p) + " is not prime");
  if (c % p == 0) throw ParameterError("p-adic request: p divides c");
  if (c * p > 100000) throw ParameterError("p-adic request: c * p too large");
}

PadicLResult padic_L_sum(const PadicLRequest& req) {
  req.validate();
  const int r = static_cast<int>(req.n.size());
  const long order = req.c * req.p;
  PadicLResult out;

  // xi_j = zeta_{cp}^{p a_j}, a_j in 1..c-1; rho_i = zeta_{cp}^{c b_i}.
  // One pass over all xi tuples for a fixed vector of per-position rho shifts.
  auto sum_over_xi = [&](const std::vector<long>& shift) {
    CyclotomicNumber acc(0);
    std::vector<long> a(r, 1);
    while (true) {
      TwistedBernoulliKey key{req.n, {}};
      for (int j = 0; j < r; ++j) {
        long e = ((req.p * a[j] + req.c * shift[j]) % order + order) % order;
        // mu_c and mu_p meet only in 1, and xi_j != 1
        if (e == 0) throw ConsistencyError("twisted argument equals 1 in the p-adic sum");
        key.xi.push_back(CyclotomicNumber::root_of_unity(static_cast<int>(order), e));
      }
      acc += twisted_multi_bernoulli(key);
      ++out.terms_enumerated;
      int j = 0;
      while (j < r && ++a[j] == req.c) a[j++] = 1;
      if (j == r) break;
    }
    return acc;
  };

  CyclotomicNumber total = sum_over_xi(std::vector<long>(r, 0));
  // Subsets i_1 < ... < i_d as bitmasks; rho_{i_l} multiplies every argument j <= i_l.
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < r; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int d = static_cast<int>(idx.size());
    CyclotomicNumber part(0);
    std::vector<long> b(d, 0);
    while (true) {
      std::vector<long> shift(r, 0);
      for (int l = 0; l < d; ++l)
        for (int j = 0; j <= idx[l]; ++j) shift[j] += b[l];
      part += sum_over_xi(shift);
      int l = 0;
      while (l < d && ++b[l] == req.p) b[l++] = 0;
      if (l == d) break;
    }
    Rational w(1);
    for (int k = 0; k < d; ++k) w *= Rational(-1, req.p);
    total += CyclotomicNumber(w) * part;
  }
  out.sum = total;
  return out;
}

Rational padic_L_nonpos(const PadicLRequest& req) {
  PadicLResult res = padic_L_sum(req);
  if (!res.sum.is_rational())
    throw ConsistencyError("p-adic L-value is not rational: " + res.sum.to_string());
  return res.sum.to_rational();
}

KLCheck kubota_leopoldt_check(int n, long c, long p) {
  if (n < 1) throw ParameterError("Kubota-Leopoldt check expects n >= 1");
  KLCheck out;
  out.lhs = padic_L_nonpos(PadicLRequest{{n}, c, p});
  Integer cn = 1, pn = 1;
  for (int k = 0; k <= n; ++k) cn *= c;
  for (int k = 0; k < n; ++k) pn *= p;
  out.rhs = Rational(Integer(1) - cn) * Rational(Integer(1) - pn) * bernoulli(n + 1) / Rational(n + 1);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace desing
