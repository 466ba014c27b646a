#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deltaconf::cli {

enum Exit : int {
  kOk = 0,
  kUsage = 1,  // also I/O and parse errors
  kNotDistanceHereditary = 2,
  kInternal = 3,
  kGuard = 4,
  kInvalid = 5,
};

/// Runs one command line. `args` excludes the program name; `-` or a missing
/// input path reads `in`. Results go to `out` unless --out names a file;
/// diagnostics and metrics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace deltaconf::cli
