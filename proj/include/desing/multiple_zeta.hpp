#pragma once

#include <vector>

#include "desing/desing.hpp"
#include "desing/special_functions.hpp"
#include "desing/zeta_models.hpp"

namespace desing {

// Exponent alpha of the box-truncation tail N^{-alpha}: the minimum over
// nonempty K of (sum of Re s_j over rows touching K) - |K|. The series is
// absolutely convergent iff alpha > 0.
double direct_sum_exponent(const HLData& data, const std::vector<Complex>& s);

// Truncated HL series with tail estimate. Throws RegionError outside the
// region of absolute convergence. Returns the best value and its error
// bound even if the sum cap stops refinement early.
NumResult hl_zeta_direct(const HLData& data, const std::vector<Complex>& s, const EvalConfig& cfg = {});

// sum_{m1, m2 >= 1} xi1^m1 xi2^m2 (m1 g1)^{-s1} (m1 g1 + m2 g2)^{-s2},
// continued by the Mellin-Barnes formula. Both twists must be roots of unity.
NumResult ezl2_continued(const Twist& xi1, const Twist& xi2, Complex gamma1, Complex gamma2, Complex s1,
                         Complex s2, const EvalConfig& cfg = {});

// HL zeta of data at s: EZL r = 2 shapes go through ezl2_continued, every
// other shape through hl_zeta_direct.
NumResult hl_zeta(const HLData& data, const std::vector<Complex>& s, const EvalConfig& cfg = {});

// sum alpha prod (s_j)_{l_j} zeta(s + m).
NumResult evaluate_identity(const DesingIdentity& id, const std::vector<Complex>& s, const EvalConfig& cfg = {});

struct TrivialResiduals {
  double relation_a = 0;   // coefficient of a
  double relation_b = 0;   // coefficient of b
  double relation_ab = 0;  // coefficient of ab
};
// |LHS| of the Mordell-Tornheim trivial relations, all terms by direct sums.
TrivialResiduals verify_trivial_relations(const std::vector<Complex>& s, const EvalConfig& cfg = {});

}  // namespace desing
