#include "gamefit/error.hpp"

namespace gamefit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "PARSE";
    case ErrorCode::kZeroDenominator: return "ZERO_DENOMINATOR";
    case ErrorCode::kEmpty: return "EMPTY";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kNegativeEntry: return "NEGATIVE_ENTRY";
    case ErrorCode::kSumNotOne: return "SUM_NOT_ONE";
    case ErrorCode::kOffsetTooSmall: return "OFFSET_TOO_SMALL";
    case ErrorCode::kNotSkewSymmetric: return "NOT_SKEW_SYMMETRIC";
    case ErrorCode::kNotOptimal: return "NOT_OPTIMAL";
    case ErrorCode::kZeroLastEntry: return "ZERO_LAST_ENTRY";
    case ErrorCode::kZeroMass: return "ZERO_MASS";
    case ErrorCode::kExponentialBlowup: return "EXPONENTIAL_BLOWUP";
    case ErrorCode::kAlphaOutOfRange: return "ALPHA_OUT_OF_RANGE";
    case ErrorCode::kTooSmall: return "TOO_SMALL";
    case ErrorCode::kCapExceeded: return "CAP_EXCEEDED";
    case ErrorCode::kWrongNorm: return "WRONG_NORM";
    case ErrorCode::kUnsupportedArrow: return "UNSUPPORTED_ARROW";
    case ErrorCode::kInvalidPath: return "INVALID_PATH";
    case ErrorCode::kInternal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace gamefit
