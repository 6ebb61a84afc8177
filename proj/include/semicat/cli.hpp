#pragma once

// The command line surface.  run_cli takes the argument vector without the
// program name and writes reports to the given streams, so tests can drive
// every command in-process.  Exit codes: 0 success, 1 failed check or
// failed verification, 2 bad input.

#include <iosfwd>
#include <string>
#include <vector>

namespace semicat {

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace semicat
