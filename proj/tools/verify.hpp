#pragma once

#include <string>
#include <vector>

#include "desing/special_functions.hpp"

namespace desing::cli {

struct CheckLine {
  std::string name;
  bool ok = false;
  std::string detail;
};

// Every published example value, checked exactly where the value is exact.
std::vector<CheckLine> published_value_checks();
// Mordell-Tornheim trivial relations at random convergent points.
std::vector<CheckLine> trivial_relation_checks(const EvalConfig& cfg);
// Mellin-Barnes vs direct sums, identity vs dispatching evaluator.
std::vector<CheckLine> oracle_checks(const EvalConfig& cfg);

}  // namespace desing::cli
