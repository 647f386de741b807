#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tiledim::cli {

// Process exit codes.
enum ExitCode : int {
    kOk = 0,           // success, or the checked property holds
    kCheckedFalse = 1, // improper / invalid / realizer rejected
    kBadInput = 2,     // malformed input, bad flags, violated precondition
    kIntegrity = 3,    // internal integrity failure
};

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tiledim::cli
