#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace matchflip {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitMalformed = 2,
  kExitBudget = 3,
  /// A broken internal invariant; always a bug.
  kExitInternal = 4,
};

/// Runs one command line (args excludes the program name). The first line
/// of `out` is YES/NO for solve and oracle and Accept/Reject for verify.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matchflip
