#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sigdef::cli {

enum ExitCode : int {
  exit_ok = 0,
  /// Mismatch, violated precondition or failed check.
  exit_failure = 1,
  exit_usage = 2,
  exit_bound = 3,
};

/// Runs one command line (without the program name). The RunReport or the
/// requested text payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace sigdef::cli
