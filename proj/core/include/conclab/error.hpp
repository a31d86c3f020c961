#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conclab {

enum class ErrorCode {
  kShapeMismatch,
  kNonFiniteEntry,
  kComputationFailed,
  kZeroState,
  kNotNormalized,
  kShrinkNotAllowed,
  kSizeMismatch,
  kBadParameter,
  kDimensionTooSmall,
  kBadOrder,
  kNonFiniteObjective,
  kWrongDims,
  kRankTooHigh,
  kNotHermitian,
  kTraceError,
  kNotPositive,
  kNotUnitary,
  kSchemaError,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library surfaces as this exception; `code()` is the
/// machine-readable category, `what()` carries the diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conclab
