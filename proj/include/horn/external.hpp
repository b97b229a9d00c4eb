#pragma once

#include <optional>
#include <string>

#include "horn/count.hpp"
#include "horn/encoder.hpp"

namespace horn {

/// Environment variable consulted for a default external counter command.
inline constexpr const char* kExternalCommandEnv = "HORN_EXTERNAL_CMD";

/// Matches `14`, `s 14` and `s mc 14` style result lines.
inline constexpr const char* kDefaultCountPattern = R"(^\s*(?:s\s+(?:mc\s+)?)?(\d+)\s*$)";

struct ExternalCounterConfig {
  /// Shell command; `{}` is replaced by the DIMACS file path, or the path is
  /// appended when there is no `{}`.
  std::string command_template;
  /// ECMAScript regex applied line by line; capture group 1 is the count.
  std::string count_pattern = kDefaultCountPattern;
};

std::optional<std::string> external_command_from_env();

/// Writes `formula` to a temporary DIMACS file, runs the configured command
/// and parses the first matching line. Throws ExternalError (with the
/// captured output) on launch failure, nonzero exit or no matching line.
Count run_external_counter(const Cnf& formula, const ExternalCounterConfig& config);

}  // namespace horn
