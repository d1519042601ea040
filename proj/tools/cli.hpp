#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xconn::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kOutOfDomain = 2,
  kInconclusive = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xconn::cli
