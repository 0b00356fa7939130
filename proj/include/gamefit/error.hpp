#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gamefit {

enum class ErrorCode {
  kParse,
  kZeroDenominator,
  kEmpty,
  kDimensionMismatch,
  kNegativeEntry,
  kSumNotOne,
  kOffsetTooSmall,
  kNotSkewSymmetric,
  kNotOptimal,
  kZeroLastEntry,
  kZeroMass,
  kExponentialBlowup,
  kAlphaOutOfRange,
  kTooSmall,
  kCapExceeded,
  kWrongNorm,
  kUnsupportedArrow,
  kInvalidPath,
  kInternal,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gamefit
