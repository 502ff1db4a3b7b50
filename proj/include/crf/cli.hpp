#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crf {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
  kExitOk = 0,
  kExitDomainError = 1,     // parse failure, size guard, usage error
  kExitVerifyFailure = 2,   // a verification suite found a counterexample
};

/// Runs the `crf` command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crf
