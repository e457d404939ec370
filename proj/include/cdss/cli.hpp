#pragma once

#include <ostream>

namespace cdss {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitParameter = 2, kExitIo = 3 };

/// Runs the command line `argv` and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cdss
