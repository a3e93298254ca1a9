#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wfomc::cli {

/// Exit codes.
enum Exit : int {
  kOk = 0,
  kFailure = 1,      // zero partition, exhausted budget, I/O
  kParse = 2,        // malformed input or command line
  kUnsupported = 3,  // outside the supported fragment
  kOracleCap = 4,    // brute force refused: too many ground atoms
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wfomc::cli
