#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "desing/cyclotomic.hpp"
#include "desing/polynomial.hpp"
#include "desing/zeta_models.hpp"

namespace desing {

// Polynomial in u_1..u_d (non-negative exponents l) and v_1..v_d (integer
// exponents m) with rational coefficients; zero coefficients are never stored.
class LaurentSeriesPoly {
 public:
  using Key = std::pair<std::vector<int>, std::vector<int>>;  // (l, m)

  explicit LaurentSeriesPoly(int nvars = 0) : nvars_(nvars) {}
  static LaurentSeriesPoly constant(int nvars, const Rational& c);
  // c * u^l v^m
  static LaurentSeriesPoly monomial(int nvars, const Rational& c, std::vector<int> l, std::vector<int> m);

  int nvars() const { return nvars_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(const std::vector<int>& l, const std::vector<int>& m) const;
  int max_u_degree() const;

  LaurentSeriesPoly& operator+=(const LaurentSeriesPoly& o);
  LaurentSeriesPoly& operator-=(const LaurentSeriesPoly& o);
  friend LaurentSeriesPoly operator+(LaurentSeriesPoly a, const LaurentSeriesPoly& b) { return a += b; }
  friend LaurentSeriesPoly operator-(LaurentSeriesPoly a, const LaurentSeriesPoly& b) { return a -= b; }
  friend LaurentSeriesPoly operator*(const LaurentSeriesPoly& a, const LaurentSeriesPoly& b);
  friend bool operator==(const LaurentSeriesPoly& a, const LaurentSeriesPoly& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Key& k, const Rational& c);
  int nvars_;
  std::map<Key, Rational> terms_;
};

// alpha * prod_j (s_j)_{l_j} * zeta(s + m)
struct IdentityTerm {
  Rational alpha;
  std::vector<int> l;
  std::vector<int> m;
  friend bool operator==(const IdentityTerm& a, const IdentityTerm& b) {
    return a.alpha == b.alpha && a.l == b.l && a.m == b.m;
  }
};

// Polynomial coefficient per shift vector m.
using ExpandedIdentity = std::map<std::vector<int>, SPoly>;

ExpandedIdentity expand_terms(int d, const std::vector<IdentityTerm>& terms);
// Pochhammer form: alpha*(s1)_2*Z(s1-1, s2+1) + ...
std::string render_terms_text(int d, const std::vector<IdentityTerm>& terms, const std::string& zeta_name);
// Grouped by shift with expanded polynomial coefficients.
std::string render_expanded_text(int d, const ExpandedIdentity& e, const std::string& zeta_name);
std::string render_expanded_latex(int d, const ExpandedIdentity& e, const std::string& zeta_name);

// zeta^des(s) = sum over terms; terms ordered lexicographically by (m, l).
struct DesingIdentity {
  HLData base;
  std::vector<IdentityTerm> terms;

  ExpandedIdentity expanded() const { return expand_terms(base.d, terms); }
  std::string to_text() const;
  std::string to_latex() const;
  friend bool operator==(const DesingIdentity& a, const DesingIdentity& b) {
    return a.base == b.base && a.terms == b.terms;
  }
};

// Requires exact (rational) gamma, beta and c; throws ParameterError otherwise.
LaurentSeriesPoly generating_function(const HLData& data, const CMatrix& c);
std::vector<IdentityTerm> terms_from_polynomial(const LaurentSeriesPoly& g);
DesingIdentity desing_identity(const HLData& data, const CMatrix& c);
// Uses the attached c-matrix or the solver's.
DesingIdentity desing_identity(const HLData& data);

// zeta^des at s_j = -lambda_j. Requires roots of unity xi and rational gamma, beta.
CyclotomicNumber special_value_nonpos(const HLData& data, const std::vector<int>& lambda);

// Relations with right-hand side 0 coming from the non-uniqueness of c
// for the Mordell-Tornheim data: coefficients of a, b and ab.
struct TrivialRelation {
  std::string name;  // "a", "b", "ab"
  std::vector<IdentityTerm> terms;
  ExpandedIdentity expanded() const { return expand_terms(3, terms); }
};
std::vector<TrivialRelation> trivial_relation_terms(const HLData& data);

}  // namespace desing
