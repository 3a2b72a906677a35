#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordanlab {

enum class ErrorCode {
  CapExceeded,
  IncompatiblePayloads,
  InvalidArgument,
  NoConsistentAction,
  HypothesisViolated,
  InvalidDegree,
  HomomorphismFailure,
  ProjectorMismatch,
  NoCleanLift,
  UnknownSuite,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this exception; the code
/// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace jordanlab
