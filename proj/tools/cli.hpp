#pragma once

#include <ostream>

namespace gtoc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kNotFound = 3,
  kInternal = 4,
};

/// Runs one command line. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gtoc::cli
