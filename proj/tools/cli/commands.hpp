#pragma once

#include <iosfwd>

namespace cannonball::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitInternal = 3,
  kExitExceedsLimit = 4,
};

/// Entry point of the `cannonball` tool. Output goes to `out`, diagnostics
/// to `err`; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cannonball::cli
