#include "qweyl/error.hpp"

namespace qweyl {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorCode::QIsZero: return "QIsZero";
    case ErrorCode::QIsOne: return "QIsOne";
    case ErrorCode::QNotMinusOne: return "QNotMinusOne";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::DegreeTooLow: return "DegreeTooLow";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::UnitInput: return "UnitInput";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::FieldLiteralError: return "FieldLiteralError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::FieldLiteralError:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

}  // namespace qweyl
