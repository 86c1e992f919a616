#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmlog {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitRuntimeError = 1, kExitUsage = 2 };

/// Runs the command-line tool. `args` excludes the program name. Results go
/// to `out`, diagnostics and usage to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmlog
