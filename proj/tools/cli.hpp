#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace horn::cli {

/// Exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  ///< verify mismatch, translate --verify mismatch
  kUsage = 2,        ///< bad flags or malformed input files
  kResource = 3,     ///< size cap or time budget exceeded
  kExternal = 4,     ///< external counter failure
};

/// Runs the horncount command line. `args` excludes the program name.
/// Output is fully buffered: nothing reaches `out` from a command that fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horn::cli
