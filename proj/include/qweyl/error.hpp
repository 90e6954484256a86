#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qweyl {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  ContextMismatch,
  ZeroInput,
  InvalidModulus,
  CharacteristicTwo,
  QIsZero,
  QIsOne,
  QNotMinusOne,
  ZeroDivisor,
  DegreeTooLow,
  WrongShape,
  ZeroLeadingCoefficient,
  UnitInput,
  SpaceTooLarge,
  SyntaxError,
  UnknownVariable,
  FieldLiteralError,
  InvalidArgument,
  Internal,
};

std::string_view error_name(ErrorCode code);

// Parse-level errors (syntax, literals) are usage errors; everything else is a
// mathematical domain error.
bool is_usage_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace qweyl
