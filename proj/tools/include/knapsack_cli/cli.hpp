#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knapsack::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,     // bad flags, unreadable or malformed instance files
  kMismatch = 2,  // verify found a disagreement
  kBudget = 3,    // an algorithm refused to run (size budget, 128-bit overflow)
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knapsack::cli
