#ifndef MAGCLOCK_CLI_HPP
#define MAGCLOCK_CLI_HPP

#include <iosfwd>

namespace magclock::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Runs the command line with data on `out` and diagnostics on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magclock::cli

#endif  // MAGCLOCK_CLI_HPP
