#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmalie::cli {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2, kExitBudgetExceeded = 3 };

/// Runs the tool on `args` (args[0] is the program name). Reports go to
/// `out` unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmalie::cli
