#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace deepvote {

enum class ErrorCode {
  Empty,
  NotAPermutation,
  DimensionMismatch,
  CapExceeded,
  InvalidOrder,
  InvalidParameter,
  NegativeWeightUnderRoot,
  NonPositiveWeight,
  NoEligibleVoter,
  NotRectangular,
  DuplicateLabel,
  UnknownLabel,
  BadCount,
  IncompleteOrder,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `index()` carries the offending
/// voter/column/line when one is known.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace deepvote
