#pragma once

#include <iosfwd>

namespace latcvx::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFalseVerdict = 1,
  kParseError = 2,
  kPreconditionError = 3,
  kInternalError = 4,
};

/// Runs the command line; all output goes through `out`/`err` unless an
/// output file is requested.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace latcvx::cli
