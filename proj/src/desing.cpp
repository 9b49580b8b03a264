#include "desing/desing.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "desing/coefficients.hpp"
#include "desing/errors.hpp"

namespace desing {

LaurentSeriesPoly LaurentSeriesPoly::constant(int nvars, const Rational& c) {
  return monomial(nvars, c, std::vector<int>(nvars, 0), std::vector<int>(nvars, 0));
}

LaurentSeriesPoly LaurentSeriesPoly::monomial(int nvars, const Rational& c, std::vector<int> l, std::vector<int> m) {
  if (static_cast<int>(l.size()) != nvars || static_cast<int>(m.size()) != nvars)
    throw ParameterError("monomial exponent length mismatch");
  for (int x : l)
    if (x < 0) throw ParameterError("u exponents must be non-negative");
  LaurentSeriesPoly p(nvars);
  p.add_term({std::move(l), std::move(m)}, c);
  return p;
}

void LaurentSeriesPoly::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentSeriesPoly::coeff(const std::vector<int>& l, const std::vector<int>& m) const {
  auto it = terms_.find({l, m});
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentSeriesPoly::max_u_degree() const {
  int best = 0;
  for (const auto& [k, c] : terms_) {
    int deg = 0;
    for (int x : k.first) deg += x;
    best = std::max(best, deg);
  }
  return best;
}

LaurentSeriesPoly& LaurentSeriesPoly::operator+=(const LaurentSeriesPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentSeriesPoly& LaurentSeriesPoly::operator-=(const LaurentSeriesPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentSeriesPoly operator*(const LaurentSeriesPoly& a, const LaurentSeriesPoly& b) {
  LaurentSeriesPoly p(std::max(a.nvars_, b.nvars_));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      LaurentSeriesPoly::Key k = ka;
      for (size_t j = 0; j < k.first.size(); ++j) {
        k.first[j] += kb.first[j];
        k.second[j] += kb.second[j];
      }
      p.add_term(k, ca * cb);
    }
  return p;
}

std::string LaurentSeriesPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    std::string mono;
    for (int j = 0; j < nvars_; ++j) {
      if (k.first[j] != 0)
        mono += (mono.empty() ? "" : "*") + std::string("u") + std::to_string(j + 1) +
                (k.first[j] > 1 ? "^" + std::to_string(k.first[j]) : "");
    }
    for (int j = 0; j < nvars_; ++j) {
      if (k.second[j] != 0)
        mono += (mono.empty() ? "" : "*") + std::string("v") + std::to_string(j + 1) +
                (k.second[j] != 1 ? "^" + std::to_string(k.second[j]) : "");
    }
    if (mono.empty() || a != 1) os << a << (mono.empty() ? "" : "*");
    os << mono;
    first = false;
  }
  return os.str();
}

namespace {

std::string shifted_arg(int j, int m, bool latex) {
  std::string v = latex ? "s_{" + std::to_string(j + 1) + "}" : "s" + std::to_string(j + 1);
  if (m > 0) v += "+" + std::to_string(m);
  if (m < 0) v += std::to_string(m);
  return v;
}

std::string zeta_call(int d, const std::vector<int>& m, const std::string& name, bool latex) {
  std::string out = name + (latex ? "\\left(" : "(");
  for (int j = 0; j < d; ++j) out += (j ? ", " : "") + shifted_arg(j, m[j], latex);
  return out + (latex ? "\\right)" : ")");
}

bool is_monomial_like(const SPoly& p) { return p.terms().size() == 1; }

const Rational& exact_of(const Scalar& x) { return x.exact(); }

}  // namespace

ExpandedIdentity expand_terms(int d, const std::vector<IdentityTerm>& terms) {
  ExpandedIdentity out;
  for (const auto& t : terms) {
    SPoly p = SPoly::constant(d, t.alpha);
    for (int j = 0; j < d; ++j) p = p * SPoly::pochhammer(d, j, t.l[j]);
    auto it = out.find(t.m);
    if (it == out.end()) out.emplace(t.m, p);
    else it->second += p;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) it = out.erase(it);
    else ++it;
  }
  return out;
}

std::string render_terms_text(int d, const std::vector<IdentityTerm>& terms, const std::string& zeta_name) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rational a = abs(t.alpha);
    os << (first ? (t.alpha < 0 ? "-" : "") : (t.alpha < 0 ? " - " : " + "));
    if (a != 1) os << a << "*";
    for (int j = 0; j < d; ++j)
      if (t.l[j] > 0) os << "(s" << j + 1 << ")_" << t.l[j] << "*";
    os << zeta_call(d, t.m, zeta_name, false);
    first = false;
  }
  return os.str();
}

std::string render_expanded_text(int d, const ExpandedIdentity& e, const std::string& zeta_name) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, p] : e) {
    if (!first) os << " + ";
    if (p == SPoly::constant(d, 1)) os << zeta_call(d, m, zeta_name, false);
    else os << "(" << p.to_string() << ")*" << zeta_call(d, m, zeta_name, false);
    first = false;
  }
  return os.str();
}

std::string render_expanded_latex(int d, const ExpandedIdentity& e, const std::string& zeta_name) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, p] : e) {
    if (!first) os << " + ";
    if (p == SPoly::constant(d, 1)) os << zeta_call(d, m, zeta_name, true);
    else if (is_monomial_like(p)) os << p.to_latex() << "\\," << zeta_call(d, m, zeta_name, true);
    else os << "\\left(" << p.to_latex() << "\\right)" << zeta_call(d, m, zeta_name, true);
    first = false;
  }
  return os.str();
}

std::string DesingIdentity::to_text() const {
  std::string lhs = "zeta_des(";
  for (int j = 0; j < base.d; ++j) lhs += (j ? ", " : "") + std::string("s") + std::to_string(j + 1);
  return lhs + ") = " + render_expanded_text(base.d, expanded(), "zeta");
}

std::string DesingIdentity::to_latex() const {
  std::string lhs = "\\zeta^{\\rm des}\\left(";
  for (int j = 0; j < base.d; ++j) lhs += (j ? ", " : "") + std::string("s_{") + std::to_string(j + 1) + "}";
  return lhs + "\\right) = " + render_expanded_latex(base.d, expanded(), "\\zeta");
}

LaurentSeriesPoly generating_function(const HLData& data, const CMatrix& c) {
  data.validate();
  check_c_matrix(data, c);
  const int d = data.d;
  LaurentSeriesPoly g = LaurentSeriesPoly::constant(d, 1);
  for (int k = 0; k < data.r; ++k) {
    if (!data.delta(k)) continue;
    // 1 + sum_j c_kj (v_j^{-1} - beta_j) = c_k0 + sum_j c_kj v_j^{-1}
    LaurentSeriesPoly a = LaurentSeriesPoly::constant(d, exact_of(c.c0[k]));
    LaurentSeriesPoly b(d);
    for (int j = 0; j < d; ++j) {
      std::vector<int> zero(d, 0), unit(d, 0), neg(d, 0);
      unit[j] = 1;
      neg[j] = -1;
      a += LaurentSeriesPoly::monomial(d, exact_of(c.c[k][j]), zero, neg);
      b += LaurentSeriesPoly::monomial(d, exact_of(data.gamma[j][k]), unit, unit);
    }
    g = g * (LaurentSeriesPoly::constant(d, 1) - a * b);
  }
  return g;
}

std::vector<IdentityTerm> terms_from_polynomial(const LaurentSeriesPoly& g) {
  std::vector<IdentityTerm> terms;
  for (const auto& [k, c] : g.terms()) terms.push_back({c, k.first, k.second});
  std::sort(terms.begin(), terms.end(), [](const IdentityTerm& x, const IdentityTerm& y) {
    return std::tie(x.m, x.l) < std::tie(y.m, y.l);
  });
  return terms;
}

DesingIdentity desing_identity(const HLData& data, const CMatrix& c) {
  DesingIdentity id;
  id.base = data;
  id.base.c = c;
  id.terms = terms_from_polynomial(generating_function(data, c));
  return id;
}

DesingIdentity desing_identity(const HLData& data) { return desing_identity(data, c_matrix_or_solve(data)); }

CyclotomicNumber special_value_nonpos(const HLData& data, const std::vector<int>& lambda) {
  data.validate();
  const int d = data.d, r = data.r;
  if (static_cast<int>(lambda.size()) != d) throw ParameterError("lambda must have d entries");
  for (int x : lambda)
    if (x < 0) throw ParameterError("lambda_j must be non-negative");
  if (!data.is_exact())
    throw ParameterError("special_value_nonpos needs roots of unity and rational gamma, beta; use the numeric module");

  struct Piece {
    std::vector<int> nu;
    Rational weight;
  };
  // per j: all (m_j, nu_j1..nu_jr) with sum lambda_j and nonzero weight
  std::vector<std::vector<Piece>> pieces(d);
  for (int j = 0; j < d; ++j) {
    Rational dj = -data.beta[j].exact();
    for (int k = 0; k < r; ++k) dj += data.gamma[j][k].exact();
    std::vector<int> nu(r, 0);
    std::function<void(int, int, Rational)> rec = [&](int k, int left, Rational w) {
      if (w == 0) return;
      if (k == r) {
        // remaining degree goes to m_j; 0^0 = 1
        Rational wm = w * rational_pow(dj, left) / Rational(factorial(left));
        if (wm != 0) pieces[j].push_back({nu, wm});
        return;
      }
      const Rational& g = data.gamma[j][k].exact();
      for (int v = 0; v <= left; ++v) {
        nu[k] = v;
        rec(k + 1, left - v, w * rational_pow(g, v) / Rational(factorial(v)));
      }
      nu[k] = 0;
    };
    rec(0, lambda[j], Rational(1));
  }

  std::vector<CyclotomicNumber> xi;
  for (const auto& x : data.xi) xi.push_back(x.exact());

  CyclotomicNumber total = 0;
  std::vector<int> n(r, 0);
  std::function<void(int, Rational)> combine = [&](int j, Rational w) {
    if (j == d) {
      CyclotomicNumber term(w);
      for (int k = 0; k < r; ++k) term *= f_delta_coeff(n[k], xi[k]);
      total += term;
      return;
    }
    for (const auto& p : pieces[j]) {
      for (int k = 0; k < r; ++k) n[k] += p.nu[k];
      combine(j + 1, w * p.weight);
      for (int k = 0; k < r; ++k) n[k] -= p.nu[k];
    }
  };
  combine(0, Rational(1));

  Rational prefactor = 1;
  for (int j = 0; j < d; ++j) prefactor *= Rational(factorial(lambda[j])) * (lambda[j] % 2 ? -1 : 1);
  return CyclotomicNumber(prefactor) * total;
}

std::vector<TrivialRelation> trivial_relation_terms(const HLData& data) {
  Mt2Family mt = mt2_data();
  HLData stripped = data;
  stripped.c.reset();
  if (!(stripped == mt.data)) throw ParameterError("trivial relations are only provided for the Mordell-Tornheim data");
  auto g = [&](int a, int b) { return generating_function(mt.data, mt.c(a, b)); };
  LaurentSeriesPoly g00 = g(0, 0), g10 = g(1, 0), g01 = g(0, 1), g11 = g(1, 1);
  // G is affine in a and in b separately, so finite differences isolate the coefficients
  return {{"a", terms_from_polynomial(g10 - g00)},
          {"b", terms_from_polynomial(g01 - g00)},
          {"ab", terms_from_polynomial(g11 - g10 - g01 + g00)}};
}

}  // namespace desing
