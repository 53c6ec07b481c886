#pragma once

// Command-line front end.  `run` is the whole program minus process setup, so
// tests can drive it with argument vectors and string streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace weylmod::cli {

enum ExitCode : int {
    Ok = 0,
    InvalidInput = 1,   // parse or validation error
    CheckFailed = 2,    // a mathematical verification failed
};

/// args excludes the program name.  Reports go to `out` (or the --out file),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylmod::cli
