#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace poisson::cli {

enum ExitCode : int {
  kSuccess = 0,
  kComputationError = 1,
  kUsageError = 2,
  kVerificationFailure = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poisson::cli
