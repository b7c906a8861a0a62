#pragma once

// Entry point of the command-line front end, separated from main() so tests
// can drive it in-process with captured streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace fsc::cli {

// args excludes the program name.  Returns the process exit code:
//   0  completed, statuses as expected
//   1  a violation / falsification was found
//   2  usage or evaluation error
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fsc::cli
