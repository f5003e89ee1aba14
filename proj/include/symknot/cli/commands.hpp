#pragma once

#include <ostream>

namespace symknot::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitResourceLimit = 3,
};

// Parses argv (argv[0] is the program name) and runs one subcommand. JSON goes
// to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symknot::cli
