#include "horn/external.hpp"

#include <sys/wait.h>

#include <array>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <unistd.h>

#include "horn/error.hpp"

namespace horn {

namespace {

std::filesystem::path temp_cnf_path() {
  static std::atomic<unsigned> serial{0};
  return std::filesystem::temp_directory_path() /
         ("horn-" + std::to_string(::getpid()) + "-" + std::to_string(serial++) + ".cnf");
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

struct TempFile {
  std::filesystem::path path;
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
};

}  // namespace

std::optional<std::string> external_command_from_env() {
  if (const char* value = std::getenv(kExternalCommandEnv); value != nullptr && *value != '\0') {
    return std::string(value);
  }
  return std::nullopt;
}

Count run_external_counter(const Cnf& formula, const ExternalCounterConfig& config) {
  if (config.command_template.empty()) throw ExternalError("no external counter command", "");
  std::regex pattern;
  try {
    pattern = std::regex(config.count_pattern);
  } catch (const std::regex_error& e) {
    throw InputError("invalid count pattern: " + std::string(e.what()));
  }

  TempFile file{temp_cnf_path()};
  {
    std::ofstream out(file.path);
    out << emit_dimacs(formula);
    if (!out) throw ExternalError("cannot write " + file.path.string(), "");
  }

  std::string command = config.command_template;
  const std::string quoted = shell_quote(file.path.string());
  if (auto at = command.find("{}"); at != std::string::npos) {
    command.replace(at, 2, quoted);
  } else {
    command += " " + quoted;
  }
  command += " 2>&1";

  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw ExternalError("cannot launch: " + command, "");
  std::string captured;
  std::array<char, 4096> buffer{};
  while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
    captured.append(buffer.data(), got);
  }
  const int status = ::pclose(pipe);
  if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const int code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    throw ExternalError("external counter exited with status " + std::to_string(code),
                        captured);
  }

  std::istringstream lines(captured);
  std::string line;
  std::smatch match;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::regex_search(line, match, pattern) && match.size() > 1 && match[1].matched) {
      try {
        return Count(match[1].str());
      } catch (const std::exception&) {
        break;
      }
    }
  }
  throw ExternalError("no line of the external counter's output matched the count pattern",
                      captured);
}

}  // namespace horn
