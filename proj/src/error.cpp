#include "gbp/error.hpp"

namespace gbp {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Underflow: return "Underflow";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotALinearExtension: return "NotALinearExtension";
    case ErrorCode::NotGreedy: return "NotGreedy";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotNFree: return "NotNFree";
    case ErrorCode::IsChain: return "IsChain";
    case ErrorCode::SizeError: return "SizeError";
    case ErrorCode::ProbabilityRange: return "ProbabilityRange";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

}  // namespace gbp
