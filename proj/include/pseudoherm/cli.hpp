#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pseudoherm::cli {

/// Exit codes: 0 success, 1 failed check or runtime error, 2 usage/config error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (spectrum, solve, verify, susy, algebra, sweep).
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rounds to 12 significant digits, the precision of every emitted number.
double round12(double value);

}  // namespace pseudoherm::cli
