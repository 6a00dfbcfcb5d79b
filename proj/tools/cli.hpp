#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace retro::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIoError = 3,
};

/// Runs the `retro` command line with argv[0] omitted.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace retro::cli
