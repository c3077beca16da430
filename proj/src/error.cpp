#include "ua/error.hpp"

namespace ua {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Capacity: return "Capacity";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnknownOp: return "UnknownOp";
    case ErrorCode::NotUncountable: return "NotUncountable";
    case ErrorCode::NoBottom: return "NoBottom";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EmptySubpower: return "EmptySubpower";
    case ErrorCode::OpSignatureMismatch: return "OpSignatureMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::Range: return "Range";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotChainAlgebra: return "NotChainAlgebra";
    case ErrorCode::Timeout: return "Timeout";
  }
  return "Unknown";
}

ParseError::ParseError(std::size_t line, std::string const& reason)
    : Error(ErrorCode::Parse,
            line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
      line_(line),
      reason_(reason) {}

}  // namespace ua
