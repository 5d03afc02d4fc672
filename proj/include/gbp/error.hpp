#pragma once

#include <stdexcept>
#include <string>

namespace gbp {

enum class ErrorCode {
  CycleDetected,
  IndexOutOfRange,
  Underflow,
  ArityMismatch,
  SizeMismatch,
  NotALinearExtension,
  NotGreedy,
  NotAutomorphism,
  PreconditionViolated,
  CapExceeded,
  NotNFree,
  IsChain,
  SizeError,
  ProbabilityRange,
  LimitExceeded,
  SyntaxError,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for every library failure; the code drives CLI exit
// statuses, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gbp
