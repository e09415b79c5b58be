#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace e7::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. The JSON report goes
/// to `out` (or the --out file), summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace e7::cli
