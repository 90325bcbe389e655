#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morsewidth {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolation = 1,
    kExitUsage = 2,
};

/// Runs `morsewidth <args...>`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker threads for sweeps: hardware concurrency, capped by the
/// MORSEWIDTH_THREADS environment variable when it holds a positive integer.
unsigned sweep_threads();

} // namespace morsewidth
