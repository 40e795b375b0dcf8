#pragma once

#include <iosfwd>

namespace quartic {

enum ExitCode : int { ExitSuccess = 0, ExitUsage = 1, ExitNonConvergence = 2 };

/// Runs the command line `argv` with stdout/stderr redirected to `out`/`err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quartic
