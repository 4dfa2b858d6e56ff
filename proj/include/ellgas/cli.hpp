#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellgas {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitThreshold = 1, kExitUsage = 2, kExitNumerical = 3 };

/// Runs the command line `args` (program name excluded). Output that goes to
/// "--out -" is written to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellgas
