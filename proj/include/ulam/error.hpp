#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ulam {

enum class ErrorCode {
  ZeroConstantTerm,
  NotNormalized,
  NormExceeded,
  DegreeTooHigh,
  DenominatorVanishes,
  MembershipFailed,
  OutsideRegion,
  IndexOutOfRange,
  UnsupportedKind,
  SharpnessFailure,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the harness in particular) can count rejections by cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ulam
