#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace szlab {

enum class ErrorCode {
  kUndefinedSubtraction,
  kUndefined,
  kOverflow,
  kNonpositivePoint,
  kNotNonIncreasing,
  kDepthExceeded,
  kOutOfScope,
  kOutOfSpace,
  kEmptyMeasure,
  kInvalidMeasure,
  kLevelOutOfRange,
  kIndexOutOfRange,
  kParamInvalid,
  kBoundViolation,
  kWindowTooSmall,
  kParseError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported as an Error carrying a stable code;
// the CLI maps codes onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace szlab
