#pragma once

#include <stdexcept>
#include <string>

namespace horn {

/// Malformed input: bad syntax, width mismatch, index out of range.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size cap or time budget was exceeded. Never carries a partial count.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An external counting tool failed or produced unparseable output.
class ExternalError : public std::runtime_error {
 public:
  ExternalError(const std::string& what, std::string captured)
      : std::runtime_error(what), captured_(std::move(captured)) {}

  const std::string& captured_output() const noexcept { return captured_; }

 private:
  std::string captured_;
};

}  // namespace horn
