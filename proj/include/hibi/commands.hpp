#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hibi {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kInvariant = 3, kBudget = 4 };

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hibi
