#include "brauerkit/error.hpp"

namespace brauerkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::NonMonogenicAtP: return "NonMonogenicAtP";
    case ErrorCode::DegreeLimitExceeded: return "DegreeLimitExceeded";
    case ErrorCode::InvalidMap: return "InvalidMap";
    case ErrorCode::InvalidPlace: return "InvalidPlace";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::BadArchimedean: return "BadArchimedean";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::ProfileIncomplete: return "ProfileIncomplete";
    case ErrorCode::DimensionNotRealizable: return "DimensionNotRealizable";
    case ErrorCode::NotDivision: return "NotDivision";
    case ErrorCode::NonIntegralD: return "NonIntegralD";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::AmbiguousSlopeMatching: return "AmbiguousSlopeMatching";
    case ErrorCode::NonIntegralDimension: return "NonIntegralDimension";
    case ErrorCode::NotIndefinite: return "NotIndefinite";
    case ErrorCode::RamifiedAtP: return "RamifiedAtP";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace brauerkit
