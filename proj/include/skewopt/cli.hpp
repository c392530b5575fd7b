#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace skewopt::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // a verification or search answer was negative under --strict
  kParseError = 2,
  kInvalidArgument = 3,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace skewopt::cli
