#include "ulam/error.hpp"

namespace ulam {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NormExceeded: return "NormExceeded";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorCode::MembershipFailed: return "MembershipFailed";
    case ErrorCode::OutsideRegion: return "OutsideRegion";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::SharpnessFailure: return "SharpnessFailure";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace ulam
