#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desing/scalar.hpp"

namespace desing {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Constants c_{mj} with sum_j c_{mj} gamma_{jk} = delta_{mk}, plus
// c_{m0} = 1 - sum_j c_{mj} beta_j. Rows m = 1..r, columns j = 1..d.
struct CMatrix {
  ScalarMatrix c;
  std::vector<Scalar> c0;

  friend bool operator==(const CMatrix& a, const CMatrix& b) { return a.c == b.c && a.c0 == b.c0; }
};

// sum_{m_1..m_r >= 0} prod_k xi_k^{m_k} prod_j (beta_j + sum_k gamma_{jk} m_k)^{-s_j}
struct HLData {
  int d = 0;
  int r = 0;
  std::vector<Twist> xi;     // r entries
  ScalarMatrix gamma;        // d x r
  std::vector<Scalar> beta;  // d entries
  std::optional<CMatrix> c;

  // Throws ParameterError on violated invariants.
  void validate() const;
  bool delta(int k) const { return xi.at(k).is_one(); }
  bool is_exact() const;

  friend bool operator==(const HLData& a, const HLData& b) {
    return a.d == b.d && a.r == b.r && a.xi == b.xi && a.gamma == b.gamma && a.beta == b.beta && a.c == b.c;
  }
};

// Builds a CMatrix from c, filling c0 from beta and checking the defining
// equations (exactly for exact entries, to 1e-12 otherwise).
CMatrix make_c_matrix(const HLData& data, ScalarMatrix c);
void check_c_matrix(const HLData& data, const CMatrix& c);

// Triangular embedding: d = r, gamma_{jk} = gamma_k for j >= k, beta_j = gamma_1 + ... + gamma_j.
HLData ezl_data(const std::vector<Twist>& xi, const std::vector<Scalar>& gamma);
// Euler-Zagier data of depth r with the canonical c attached.
HLData ez_data(int r);

struct Mt2Family {
  HLData data;
  CMatrix c(const Rational& a, const Rational& b) const;
};
Mt2Family mt2_data();

std::pair<HLData, CMatrix> root_system_rank2_data(const std::vector<std::vector<Rational>>& pairings,
                                                  const std::vector<Twist>& xi);

// Basic solution of C Gamma = I by exact elimination (numeric elimination
// with partial pivoting when gamma has float entries).
CMatrix solve_c_matrix(const HLData& data);

// C attached to data, or solve_c_matrix(data).
CMatrix c_matrix_or_solve(const HLData& data);

// Triangular (EZL) view of HLData, if it has that shape.
struct EzlView {
  std::vector<Twist> xi;
  std::vector<Scalar> gamma;
};
std::optional<EzlView> as_ezl(const HLData& data);

struct SingularHyperplane {
  int first = 1;  // s_first + ... + s_last = constant (1-based indices)
  int last = 1;
  std::vector<long> constants;  // enumerated up to l_max
  std::string tag;              // "I".."V"
  std::string family;           // e.g. "C(j,r) - l"
};

struct SingularityCatalog {
  std::vector<SingularHyperplane> hyperplanes;
  bool empty() const { return hyperplanes.empty(); }
};

// C(j, r) = #{h : j <= h <= r, xi_h = 1}, 1-based j.
int count_trivial_twists(const std::vector<Twist>& xi, int j, int r);

SingularityCatalog singular_hyperplanes(const std::vector<Twist>& xi, int l_max);

// Builtins "ez2", "ez3", "mt2", "a2".
HLData builtin_data(const std::string& name);

}  // namespace desing
