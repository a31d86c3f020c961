#include "conclab/error.hpp"

namespace conclab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::kComputationFailed: return "ComputationFailed";
    case ErrorCode::kZeroState: return "ZeroState";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kShrinkNotAllowed: return "ShrinkNotAllowed";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kBadParameter: return "BadParameter";
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::kBadOrder: return "BadOrder";
    case ErrorCode::kNonFiniteObjective: return "NonFiniteObjective";
    case ErrorCode::kWrongDims: return "WrongDims";
    case ErrorCode::kRankTooHigh: return "RankTooHigh";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kTraceError: return "TraceError";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace conclab
