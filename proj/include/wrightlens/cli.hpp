#pragma once

#include <iosfwd>

namespace wrightlens::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParameterError = 2,
  kNumericalFailure = 3,
  kTruncation = 4,
  kInputFormat = 5,
};

/// Runs the command line `argv[1..argc)`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wrightlens::cli
