#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lxmod::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; the return value is an ExitCode.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lxmod::cli
