#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gforest {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;   // property fails or counterexample found
inline constexpr int kExitUsage = 2;  // usage, parse or budget error

/// Runs one command line (without the program name). Documents go to out,
/// diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gforest
