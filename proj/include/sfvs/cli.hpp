#pragma once

#include <iosfwd>

namespace sfvs {

// Exit codes: 0 ok, 1 bad input or usage, 2 infeasible (solution fails to
// verify, or graph is not chordal), 3 resource budget exceeded, 4 internal
// error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace sfvs
