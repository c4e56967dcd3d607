#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mrr::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kBudget = 3,
};

/// Runs `mrrtool` with `args` (excluding the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mrr::cli
