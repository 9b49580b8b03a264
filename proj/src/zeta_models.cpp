#include "desing/zeta_models.hpp"

#include <cmath>

#include "desing/errors.hpp"

namespace desing {
namespace {

bool all_exact(const ScalarMatrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_exact()) return false;
  return true;
}

}  // namespace

bool HLData::is_exact() const {
  for (const auto& x : xi)
    if (!x.is_root_of_unity()) return false;
  for (const auto& b : beta)
    if (!b.is_exact()) return false;
  return all_exact(gamma);
}

void HLData::validate() const {
  if (d < 1 || r < 1) throw ParameterError("d and r must be positive");
  if (static_cast<int>(xi.size()) != r) throw ParameterError("xi must have r entries");
  if (static_cast<int>(beta.size()) != d) throw ParameterError("beta must have d entries");
  if (static_cast<int>(gamma.size()) != d) throw ParameterError("gamma must have d rows");
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(gamma[j].size()) != r) throw ParameterError("gamma rows must have r entries");
    bool positive = false;
    for (const auto& g : gamma[j]) {
      if (g.value().real() < 0) throw ParameterError("Re gamma_jk must be >= 0");
      if (g.value().real() > 0) positive = true;
    }
    if (!positive) throw ParameterError("each gamma row needs an entry with positive real part");
    if (beta[j].value().real() <= 0) throw ParameterError("Re beta_j must be > 0");
  }
  // every index m_k must occur in some form, else the sum diverges trivially
  for (int k = 0; k < r; ++k) {
    bool used = false;
    for (int j = 0; j < d; ++j) used = used || !gamma[j][k].is_zero();
    if (!used) throw ParameterError("summation index " + std::to_string(k + 1) + " occurs in no linear form");
  }
  if (c) check_c_matrix(*this, *c);
}

void check_c_matrix(const HLData& data, const CMatrix& cm) {
  if (static_cast<int>(cm.c.size()) != data.r || static_cast<int>(cm.c0.size()) != data.r)
    throw ParameterError("c-matrix must have r rows");
  for (int m = 0; m < data.r; ++m) {
    if (static_cast<int>(cm.c[m].size()) != data.d) throw ParameterError("c-matrix rows must have d entries");
    Scalar c0 = 1;
    for (int j = 0; j < data.d; ++j) c0 = c0 - cm.c[m][j] * data.beta[j];
    for (int k = 0; k < data.r; ++k) {
      Scalar sum = 0;
      for (int j = 0; j < data.d; ++j) sum = sum + cm.c[m][j] * data.gamma[j][k];
      Scalar want = m == k ? 1 : 0;
      bool ok = sum.is_exact() ? sum == want : std::abs(sum.value() - want.value()) < 1e-12;
      if (!ok) throw ParameterError("c-matrix violates sum_j c_mj gamma_jk = delta_mk");
    }
    bool ok0 = (c0.is_exact() && cm.c0[m].is_exact()) ? c0 == cm.c0[m]
                                                        : std::abs(c0.value() - cm.c0[m].value()) < 1e-12;
    if (!ok0) throw ParameterError("c_m0 must equal 1 - sum_j c_mj beta_j");
  }
}

CMatrix make_c_matrix(const HLData& data, ScalarMatrix c) {
  CMatrix cm;
  cm.c = std::move(c);
  if (static_cast<int>(cm.c.size()) != data.r) throw ParameterError("c-matrix must have r rows");
  for (const auto& row : cm.c) {
    if (static_cast<int>(row.size()) != data.d) throw ParameterError("c-matrix rows must have d entries");
    Scalar c0 = 1;
    for (int j = 0; j < data.d; ++j) c0 = c0 - row[j] * data.beta[j];
    cm.c0.push_back(c0);
  }
  check_c_matrix(data, cm);
  return cm;
}

HLData ezl_data(const std::vector<Twist>& xi, const std::vector<Scalar>& gamma) {
  if (xi.empty() || xi.size() != gamma.size()) throw ParameterError("xi and gamma must have equal positive length");
  for (const auto& g : gamma)
    if (g.value().real() <= 0) throw ParameterError("Re gamma_j must be > 0");
  HLData h;
  h.r = h.d = static_cast<int>(xi.size());
  h.xi = xi;
  h.gamma.assign(h.d, std::vector<Scalar>(h.r, Scalar(0)));
  Scalar partial = 0;
  for (int j = 0; j < h.d; ++j) {
    for (int k = 0; k <= j; ++k) h.gamma[j][k] = gamma[k];
    partial = partial + gamma[j];
    h.beta.push_back(partial);
  }
  h.validate();
  return h;
}

HLData ez_data(int r) {
  HLData h = ezl_data(std::vector<Twist>(r, Twist::one()), std::vector<Scalar>(r, Scalar(1)));
  h.c = solve_c_matrix(h);
  return h;
}

CMatrix Mt2Family::c(const Rational& a, const Rational& b) const {
  return make_c_matrix(data, {{Scalar(Rational(a + 1)), Scalar(a), Scalar(Rational(-a))},
                              {Scalar(b), Scalar(Rational(b + 1)), Scalar(Rational(-b))}});
}

Mt2Family mt2_data() {
  Mt2Family f;
  f.data.d = 3;
  f.data.r = 2;
  f.data.xi = {Twist::one(), Twist::one()};
  f.data.gamma = {{1, 0}, {0, 1}, {1, 1}};
  f.data.beta = {1, 1, 2};
  f.data.validate();
  return f;
}

std::pair<HLData, CMatrix> root_system_rank2_data(const std::vector<std::vector<Rational>>& pairings,
                                                  const std::vector<Twist>& xi) {
  const int r = static_cast<int>(xi.size());
  if (r < 1 || static_cast<int>(pairings.size()) < r) throw ParameterError("need at least r positive roots");
  for (int a = 0; a < r; ++a) {
    if (static_cast<int>(pairings[a].size()) != r) throw ParameterError("pairing rows must have r entries");
    for (int k = 0; k < r; ++k)
      if (pairings[a][k] != (a == k ? 1 : 0))
        throw ParameterError("first r pairing rows must form the identity (simple roots first)");
  }
  HLData h;
  h.r = r;
  h.d = static_cast<int>(pairings.size());
  h.xi = xi;
  for (const auto& row : pairings) {
    if (static_cast<int>(row.size()) != r) throw ParameterError("pairing rows must have r entries");
    std::vector<Scalar> g;
    Rational sum = 0;
    for (const auto& x : row) {
      g.emplace_back(x);
      sum += x;
    }
    h.gamma.push_back(g);
    h.beta.emplace_back(sum);
  }
  h.validate();
  ScalarMatrix c(r, std::vector<Scalar>(h.d, Scalar(0)));
  for (int m = 0; m < r; ++m) c[m][m] = 1;
  CMatrix cm = make_c_matrix(h, c);
  return {h, cm};
}

CMatrix solve_c_matrix(const HLData& data) {
  const int r = data.r, d = data.d;
  // Row-reduce [Gamma^T | I_r]; pivot columns become the support.
  std::vector<std::vector<Scalar>> a(r, std::vector<Scalar>(d + r, Scalar(0)));
  for (int k = 0; k < r; ++k) {
    for (int j = 0; j < d; ++j) a[k][j] = data.gamma[j][k];
    a[k][d + k] = 1;
  }
  const bool exact = all_exact(data.gamma);
  auto negligible = [&](const Scalar& x) { return exact ? x.is_zero() : std::abs(x.value()) < 1e-13; };
  std::vector<int> pivot_col(r, -1);
  int row = 0;
  for (int col = 0; col < d && row < r; ++col) {
    int piv = -1;
    for (int i = row; i < r; ++i) {
      if (negligible(a[i][col])) continue;
      if (piv < 0) piv = i;
      if (!exact && std::abs(a[i][col].value()) > std::abs(a[piv][col].value())) piv = i;
      if (exact) break;
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    Scalar inv = Scalar(1) / a[row][col];
    for (auto& x : a[row]) x = x * inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Scalar f = a[i][col];
      for (int k = 0; k < d + r; ++k) a[i][k] = a[i][k] - f * a[row][k];
    }
    pivot_col[row] = col;
    ++row;
  }
  if (row < r) throw ParameterError("assumption unsatisfiable: gamma does not have full column rank");
  // Gamma^T x = e_m: x_{pivot_col[i]} = (row i of the transformed identity)[m]
  ScalarMatrix c(r, std::vector<Scalar>(d, Scalar(0)));
  for (int m = 0; m < r; ++m)
    for (int i = 0; i < r; ++i) c[m][pivot_col[i]] = a[i][d + m];
  return make_c_matrix(data, c);
}

CMatrix c_matrix_or_solve(const HLData& data) { return data.c ? *data.c : solve_c_matrix(data); }

std::optional<EzlView> as_ezl(const HLData& data) {
  if (data.d != data.r) return std::nullopt;
  EzlView v;
  v.xi = data.xi;
  Scalar partial = 0;
  for (int j = 0; j < data.d; ++j) {
    for (int k = 0; k < data.r; ++k) {
      const Scalar& g = data.gamma[j][k];
      if (k > j && !g.is_zero()) return std::nullopt;
      if (k <= j && g != data.gamma[k][k]) return std::nullopt;
    }
    v.gamma.push_back(data.gamma[j][j]);
    partial = partial + data.gamma[j][j];
    if (partial != data.beta[j]) return std::nullopt;
  }
  return v;
}

int count_trivial_twists(const std::vector<Twist>& xi, int j, int r) {
  int count = 0;
  for (int h = j; h <= r; ++h)
    if (xi.at(h - 1).is_one()) ++count;
  return count;
}

SingularityCatalog singular_hyperplanes(const std::vector<Twist>& xi, int l_max) {
  if (l_max < 0) throw ParameterError("l_max must be non-negative");
  for (const auto& x : xi)
    if (!x.is_root_of_unity() && std::abs(std::abs(x.value()) - 1.0) > 1e-15)
      throw ParameterError("singularity catalog requires |xi_j| = 1 (EZL family only)");
  const int r = static_cast<int>(xi.size());
  SingularityCatalog cat;
  for (int j = 1; j <= r - 2; ++j) {
    if (!xi[j - 1].is_one()) continue;
    SingularHyperplane h{j, r, {}, "I", "C(j,r) - l"};
    int c = count_trivial_twists(xi, j, r);
    for (int l = 0; l <= l_max; ++l) h.constants.push_back(c - l);
    cat.hyperplanes.push_back(h);
  }
  if (r >= 2 && xi[r - 2].is_one()) {
    const Twist& last = xi[r - 1];
    SingularHyperplane h{r - 1, r, {}, "", ""};
    if (last.is_one()) {
      h.tag = "II";
      h.family = "2, 1, -2l";
      h.constants = {2, 1};
      for (int l = 0; l <= l_max; ++l) h.constants.push_back(-2L * l);
    } else if (last.is_minus_one()) {
      h.tag = "III";
      h.family = "1, -2l";
      h.constants = {1};
      for (int l = 0; l <= l_max; ++l) h.constants.push_back(-2L * l);
    } else {
      h.tag = "IV";
      h.family = "1 - l";
      for (int l = 0; l <= l_max; ++l) h.constants.push_back(1 - l);
    }
    cat.hyperplanes.push_back(h);
  }
  if (r >= 1 && xi[r - 1].is_one()) cat.hyperplanes.push_back({r, r, {1}, "V", "1"});
  return cat;
}

HLData builtin_data(const std::string& name) {
  if (name == "ez2") return ez_data(2);
  if (name == "ez3") return ez_data(3);
  if (name == "mt2") {
    Mt2Family f = mt2_data();
    f.data.c = f.c(0, 0);
    return f.data;
  }
  if (name == "a2") {
    auto [h, c] = root_system_rank2_data({{1, 0}, {0, 1}, {1, 1}}, {Twist::one(), Twist::one()});
    h.c = c;
    return h;
  }
  throw ParameterError("unknown builtin data: " + name);
}

}  // namespace desing
