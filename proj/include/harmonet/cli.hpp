#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmonet::cli {

// Exit codes shared by the binary and the tests.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,        // bad flags, malformed specs, invalid ranges
    exit_asymmetric = 3,   // requested pair sits on inequivalent sites
    exit_numerical = 4,    // quadrature/eigensolver/discriminant failures
    exit_separable = 5,    // threshold asked for a pair with no entanglement at T = 0
};

// Run the command-line tool on an argv-style vector (program name excluded).
// All regular output goes to `out`, diagnostics to `err`. Returns the exit
// code. This is the whole CLI; main() is a thin wrapper so tests can drive
// it in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmonet::cli
