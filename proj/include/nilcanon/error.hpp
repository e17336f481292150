#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilcanon {

enum class ErrorCode {
  NonPrime,
  NotPrimePower,
  NoIrreducibleFound,
  DivisionByZero,
  FieldMismatch,
  WrongField,
  ShapeMismatch,
  Singular,
  NotSquare,
  ZeroScale,
  TypeSizeMismatch,
  BadPartition,
  SymmetricFormImpossible,
  CharacteristicTwo,
  FieldTooSmall,
  NotGeneric,
  NotNilpotent,
  NotUnipotent,
  NotSupported,
  AlphaInBaseField,
  TypeA,
  ParseError,
  VerificationFailure,
  InternalError,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported through this exception. `witness`
/// carries the offending part for BadPartition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<int> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<int> witness_;
};

}  // namespace nilcanon
