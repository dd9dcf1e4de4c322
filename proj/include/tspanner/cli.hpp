#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tspanner::cli {

enum ExitCode : int {
  kOk = 0,
  kNoSpanner = 1,
  kNotOuterplanar = 2,
  kParseError = 3,
};

/// Runs the command line tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tspanner::cli
