#pragma once

#include <stdexcept>
#include <string>

namespace dockclique {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Validation,
  Resource,
  Io,
  Numeric,
};

/// Library-wide exception type. The code discriminates the failure class so
/// that the C API and the CLI can map it to a status / exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dockclique
