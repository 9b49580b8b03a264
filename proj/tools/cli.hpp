#pragma once

#include <ostream>

namespace desing::cli {

// Exit codes: 0 ok, 1 verify mismatch, 2 parameter error, 3 pole/region,
// 4 accuracy, 5 internal consistency.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace desing::cli
