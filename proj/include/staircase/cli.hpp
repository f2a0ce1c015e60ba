#pragma once

#include <iosfwd>

namespace staircase {

// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFalse = 1,       // a verification found a counterexample or mismatch
    kExitUsage = 2,       // bad arguments, unparsable input, invalid objects
    kExitCapacity = 3,    // size limits, degenerate parameters, out-of-domain values
};

// Entry point of the `staircase` tool. `in` backs stdin-reading commands; all
// normal output goes to `out` (or --output), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace staircase
