#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace silverline {

enum class ErrorCode {
  InvalidArgument,
  InvalidDegree,
  UnsupportedDegree,
  IncompatibleField,
  ReducibleModulus,
  Precondition,
  NotFound,
  NoDecomposition,
  SingularTransform,
  Incompatible,
  CannotCertify,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type for every library failure. The code is stable and is what
/// the CLI reports in its machine-readable error object.
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

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace silverline
