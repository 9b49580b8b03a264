#include "desing/coefficients.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "desing/errors.hpp"
#include "desing/power_series.hpp"

namespace desing {
namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

std::mutex g_lerch_mutex;
std::map<std::string, std::vector<CyclotomicNumber>> g_lerch;

std::mutex g_fdelta_mutex;
std::map<std::pair<int, std::string>, CyclotomicNumber> g_fdelta;

// Divided-power coefficients of 1/(1 - xi e^t) up to order k.
std::vector<CyclotomicNumber> lerch_series(int k, const CyclotomicNumber& xi) {
  using S = PowerSeries1<CyclotomicNumber>;
  S denom = S(k, {CyclotomicNumber(1)}) - xi * S::exp_linear(k, CyclotomicNumber(1));
  S q = S(k, {CyclotomicNumber(1)}) / denom;
  std::vector<CyclotomicNumber> out;
  out.reserve(k + 1);
  for (int i = 0; i <= k; ++i) out.push_back(q.divided_power_coeff(i));
  return out;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw ParameterError("bernoulli index must be non-negative");
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  for (int m = static_cast<int>(g_bernoulli.size()); m <= n; ++m) {
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * g_bernoulli[k];
    g_bernoulli.push_back(-acc / Rational(m + 1));
  }
  return g_bernoulli[n];
}

Rational zeta_nonpositive(int k) {
  if (k < 0) throw ParameterError("zeta_nonpositive expects k >= 0");
  if (k == 0) return Rational(-1, 2);
  return -bernoulli(k + 1) / Rational(k + 1);
}

CyclotomicNumber lerch_neg_coeff(int k, const CyclotomicNumber& xi) {
  if (k < 0) throw ParameterError("lerch_neg_coeff expects k >= 0");
  if (xi.is_one()) throw ParameterError("xi = 1: use the zeta-at-non-positive-integers path");
  const std::string key = xi.key();
  {
    std::lock_guard<std::mutex> lock(g_lerch_mutex);
    auto it = g_lerch.find(key);
    if (it != g_lerch.end() && static_cast<int>(it->second.size()) > k) return it->second[k];
  }
  int order = 8;
  while (order < k) order *= 2;
  auto values = lerch_series(order, xi);
  std::lock_guard<std::mutex> lock(g_lerch_mutex);
  auto& slot = g_lerch[key];
  if (slot.size() < values.size()) slot = std::move(values);
  return slot[k];
}

CyclotomicNumber frobenius_euler(int k, const CyclotomicNumber& xi) {
  if (xi.is_one()) throw ParameterError("Frobenius-Euler number undefined at xi = 1");
  return (CyclotomicNumber(1) - xi) * lerch_neg_coeff(k, xi);
}

CyclotomicNumber f_delta_coeff(int n, const CyclotomicNumber& xi) {
  if (n < 0) throw ParameterError("f_delta_coeff expects n >= 0");
  const auto key = std::make_pair(n, xi.key());
  {
    std::lock_guard<std::mutex> lock(g_fdelta_mutex);
    auto it = g_fdelta.find(key);
    if (it != g_fdelta.end()) return it->second;
  }
  using S = PowerSeries1<CyclotomicNumber>;
  CyclotomicNumber series_value, closed_form;
  if (xi.is_one()) {
    // ((e^y - 1) - y e^y) / (e^y - 1)^2 with y^2 cancelled from both sides.
    const int m = n;
    S num(m), e1(m);
    for (int k = 0; k <= m; ++k) {
      // (e^y - 1 - y e^y)/y^2 = sum_k [1/(k+2)! - 1/(k+1)!] y^k
      num[k] = CyclotomicNumber(Rational(1, 1) / Rational(factorial(k + 2)) -
                                Rational(1, 1) / Rational(factorial(k + 1)));
      e1[k] = CyclotomicNumber(Rational(1) / Rational(factorial(k + 1)));
    }
    series_value = (num / (e1 * e1)).divided_power_coeff(n);
    closed_form = CyclotomicNumber(bernoulli(n + 1));
  } else {
    S denom = S::exp_linear(n, CyclotomicNumber(1)) - S(n, {xi});
    series_value = (S(n, {CyclotomicNumber(1)}) / denom).divided_power_coeff(n);
    const CyclotomicNumber xinv = xi.inverse();
    closed_form = frobenius_euler(n, xinv) / (CyclotomicNumber(1) - xi);
  }
  if (series_value != closed_form)
    throw ConsistencyError("F-coefficient series value disagrees with closed form at n=" + std::to_string(n) +
                           ", xi=" + xi.to_string());
  std::lock_guard<std::mutex> lock(g_fdelta_mutex);
  g_fdelta.emplace(key, series_value);
  return series_value;
}

}  // namespace desing
