#include "desing/polynomial.hpp"

#include <sstream>

#include "desing/errors.hpp"

namespace desing {

Poly1::Poly1(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly1::Poly1(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

void Poly1::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly1::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Poly1::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Poly1 Poly1::shifted(const Rational& a) const {
  Poly1 out, lin = linear(a), pw(Rational(1));
  for (const auto& c : c_) {
    out += Poly1(c) * pw;
    pw = pw * lin;
  }
  return out;
}

Poly1 Poly1::divide_root(const Rational& root) const {
  if ((*this)(root) != 0) throw ParameterError("divide_root: not a root");
  if (c_.empty()) return {};
  // synthetic division
  std::vector<Rational> q(c_.size() - 1);
  Rational carry = 0;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 1; --k) {
    carry = c_[k] + carry * root;
    q[k - 1] = carry;
  }
  return Poly1(q);
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return Poly1(out);
}

std::string Poly1::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    if (k == 0 || a != 1) os << a;
    if (k > 0) os << (k == 0 || a != 1 ? "*" : "") << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

SPoly SPoly::constant(int nvars, const Rational& c) {
  SPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

SPoly SPoly::variable(int nvars, int j, const Rational& a) {
  SPoly p(nvars);
  Exponents e(nvars, 0);
  e[j] = 1;
  p.add_term(e, 1);
  p.add_term(Exponents(nvars, 0), a);
  return p;
}

SPoly SPoly::pochhammer(int nvars, int j, int l) {
  SPoly p = constant(nvars, 1);
  for (int i = 0; i < l; ++i) p = p * variable(nvars, j, i);
  return p;
}

void SPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::complex<double> SPoly::operator()(const std::vector<std::complex<double>>& s) const {
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (int j = 0; j < nvars_; ++j)
      for (int k = 0; k < e[j]; ++k) t *= s[j];
    acc += t;
  }
  return acc;
}

Rational SPoly::operator()(const std::vector<Rational>& s) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int j = 0; j < nvars_; ++j) t *= rational_pow(s[j], e[j]);
    acc += t;
  }
  return acc;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  SPoly p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      SPoly::Exponents e(p.nvars_, 0);
      for (size_t j = 0; j < ea.size(); ++j) e[j] += ea[j];
      for (size_t j = 0; j < eb.size(); ++j) e[j] += eb[j];
      p.add_term(e, ca * cb);
    }
  return p;
}

SPoly operator*(const Rational& q, const SPoly& a) { return SPoly::constant(a.nvars_, q) * a; }

namespace {

std::string render(const std::map<SPoly::Exponents, Rational>& terms, int nvars, bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest total degree first
  std::vector<std::pair<SPoly::Exponents, Rational>> ordered(terms.rbegin(), terms.rend());
  for (const auto& [e, c] : ordered) {
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    bool constant = true;
    for (int x : e) constant = constant && x == 0;
    bool wrote = false;
    if (constant || a != 1) {
      if (latex && a.get_den() != 1)
        os << "\\frac{" << a.get_num() << "}{" << a.get_den() << "}";
      else
        os << a;
      wrote = true;
    }
    for (int j = 0; j < nvars; ++j) {
      if (e[j] == 0) continue;
      if (wrote && !latex) os << "*";
      os << (latex ? "s_{" : "s") << j + 1 << (latex ? "}" : "");
      if (e[j] > 1) os << "^" << (latex ? "{" : "") << e[j] << (latex ? "}" : "");
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string SPoly::to_string() const { return render(terms_, nvars_, false); }
std::string SPoly::to_latex() const { return render(terms_, nvars_, true); }

}  // namespace desing
