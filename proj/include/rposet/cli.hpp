#pragma once

#include <ostream>

namespace rposet {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInputError = 2 };

/// Entry point for the rposet command line; returns the process exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rposet
