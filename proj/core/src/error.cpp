#include "deepvote/error.hpp"

namespace deepvote {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NegativeWeightUnderRoot: return "NegativeWeightUnderRoot";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NoEligibleVoter: return "NoEligibleVoter";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::BadCount: return "BadCount";
    case ErrorCode::IncompleteOrder: return "IncompleteOrder";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      index_(index) {}

}  // namespace deepvote
