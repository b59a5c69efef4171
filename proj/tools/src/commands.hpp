#pragma once

#include <iosfwd>
#include <vector>

namespace strata::cli {

/// Exit codes: 0 success, 1 a check failed, 2 malformed input or usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs `strata <args...>`; argv[0] is the program name.
int run_command(const std::vector<const char*>& argv, std::ostream& out, std::ostream& err);

}  // namespace strata::cli
