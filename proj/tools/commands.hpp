#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace adlie::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,   ///< verification failure or negative decision
  kUsage = 2,     ///< bad flags, unreadable or malformed input
  kInternal = 3,  ///< an internal invariant did not hold
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adlie::cli
