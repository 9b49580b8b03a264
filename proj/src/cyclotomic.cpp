#include "desing/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "desing/errors.hpp"

namespace desing {
namespace {

struct Field {
  int n = 1;
  int degree = 1;
  // powers[k] = zeta^k reduced, k = 0..n-1
  std::vector<std::vector<Rational>> powers;
};

std::vector<Integer> poly_exact_div(std::vector<Integer> a, const std::vector<Integer>& b) {
  // b monic
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  std::vector<Integer> q(da - db + 1);
  for (int i = da - db; i >= 0; --i) {
    q[i] = a[i + db];
    for (int j = 0; j <= db; ++j) a[i + j] -= q[i] * b[j];
  }
  return q;
}

std::mutex g_poly_mutex;
std::map<int, std::vector<Integer>> g_polys;

std::mutex g_field_mutex;
std::map<int, std::shared_ptr<const Field>> g_fields;

std::shared_ptr<const Field> field(int n) {
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto it = g_fields.find(n);
  if (it != g_fields.end()) return it->second;
  auto f = std::make_shared<Field>();
  f->n = n;
  const auto& phi = cyclotomic_polynomial(n);
  f->degree = static_cast<int>(phi.size()) - 1;
  std::vector<Rational> cur(f->degree, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    f->powers.push_back(cur);
    // multiply by x and reduce with the monic phi
    std::vector<Rational> next(f->degree, 0);
    Rational top = cur[f->degree - 1];
    for (int i = f->degree - 1; i > 0; --i) next[i] = cur[i - 1];
    for (int i = 0; i < f->degree; ++i) next[i] -= top * Rational(phi[i]);
    cur = std::move(next);
  }
  g_fields[n] = f;
  return f;
}

int lcm_order(int a, int b) { return std::lcm(a, b); }

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  if (n < 1) throw ParameterError("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(g_poly_mutex);
    auto it = g_polys.find(n);
    if (it != g_polys.end()) return it->second;
  }
  std::vector<Integer> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_div(p, cyclotomic_polynomial(d));
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  return g_polys.emplace(n, std::move(p)).first->second;
}

long euler_totient(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicNumber::CyclotomicNumber() : order_(1), coeffs_(1, Rational(0)) {}

CyclotomicNumber::CyclotomicNumber(const Rational& q) : order_(1), coeffs_(1, q) { coeffs_[0].canonicalize(); }

CyclotomicNumber::CyclotomicNumber(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw ParameterError("cyclotomic order must be positive");
  if (static_cast<long>(coeffs_.size()) != euler_totient(order))
    throw ParameterError("coefficient vector length must equal phi(order)");
  for (auto& c : coeffs_) c.canonicalize();
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int order, long power) {
  auto f = field(order);
  long k = ((power % order) + order) % order;
  return CyclotomicNumber(order, f->powers[k]);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const { return is_rational() && coeffs_[0] == 1; }

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw ConsistencyError("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::in_order(int n) const {
  if (n == order_) return *this;
  if (n % order_ != 0) throw ParameterError("cannot embed Q(zeta_" + std::to_string(order_) +
                                            ") in Q(zeta_" + std::to_string(n) + ")");
  auto f = field(n);
  int step = n / order_;
  std::vector<Rational> out(f->degree, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = f->powers[(i * step) % n];
    for (int j = 0; j < f->degree; ++j) out[j] += coeffs_[i] * row[j];
  }
  return CyclotomicNumber(n, std::move(out));
}

CyclotomicNumber CyclotomicNumber::galois(long a) const {
  if (std::gcd(a, static_cast<long>(order_)) != 1) throw ParameterError("galois exponent not a unit");
  auto f = field(order_);
  std::vector<Rational> out(f->degree, 0);
  long am = ((a % order_) + order_) % order_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = f->powers[(am * static_cast<long>(i)) % order_];
    for (int j = 0; j < f->degree; ++j) out[j] += coeffs_[i] * row[j];
  }
  return CyclotomicNumber(order_, std::move(out));
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  int n = lcm_order(order_, o.order_);
  if (n != order_) *this = in_order(n);
  const CyclotomicNumber b = o.in_order(n);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  int n = lcm_order(order_, o.order_);
  if (n != order_) *this = in_order(n);
  const CyclotomicNumber b = o.in_order(n);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (o.order_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (order_ == 1) {
    Rational q = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= q;
    return *this;
  }
  int n = lcm_order(order_, o.order_);
  const CyclotomicNumber a = in_order(n), b = o.in_order(n);
  auto f = field(n);
  std::vector<Rational> out(f->degree, 0);
  for (int i = 0; i < f->degree; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < f->degree; ++j) {
      if (b.coeffs_[j] == 0) continue;
      Rational p = a.coeffs_[i] * b.coeffs_[j];
      const auto& row = f->powers[(i + j) % n];
      for (int k = 0; k < f->degree; ++k)
        if (row[k] != 0) out[k] += p * row[k];
    }
  }
  order_ = n;
  coeffs_ = std::move(out);
  return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw ParameterError("inverse of zero");
  if (order_ == 1) return CyclotomicNumber(Rational(1) / coeffs_[0]);
  // Solve M v = e0, column i of M is this * zeta^i.
  auto f = field(order_);
  const int d = f->degree;
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1, 0));
  for (int i = 0; i < d; ++i) {
    CyclotomicNumber col = *this * CyclotomicNumber(order_, f->powers[i]);
    for (int r = 0; r < d; ++r) m[r][i] = col.coeffs_[r];
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) throw ConsistencyError("singular multiplication matrix in cyclotomic inverse");
    std::swap(m[piv], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (int k = c; k <= d; ++k) m[c][k] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational factor = m[r][c];
      for (int k = c; k <= d; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  std::vector<Rational> out(d);
  for (int r = 0; r < d; ++r) out[r] = m[r][d];
  return CyclotomicNumber(order_, std::move(out));
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber CyclotomicNumber::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CyclotomicNumber result(Rational(1)), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  int n = std::lcm(a.order_, b.order_);
  return a.in_order(n).coeffs_ == b.in_order(n).coeffs_;
}

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> z = 0;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    double angle = 2.0 * M_PI * static_cast<double>(i) / order_;
    z += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::string CyclotomicNumber::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z" << order_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::string CyclotomicNumber::key() const {
  std::string k = std::to_string(order_) + ":";
  for (const auto& c : coeffs_) k += c.get_str() + ",";
  return k;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& z) { return os << z.to_string(); }

}  // namespace desing
