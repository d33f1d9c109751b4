#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polybound::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInvalidFlags = 3,
  kVerificationFailed = 4,
};

/// Runs the command line `polybound <args...>` (args excludes the program
/// name). Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polybound::cli
