#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glfix {

// Stable error identifiers. The CLI reports these names verbatim.
enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  ZeroPolynomial,
  ZeroScalar,
  ConstantPolynomial,
  CapExceeded,
  ReducibleInput,
  NotMonic,
  Singular,
  NotInvariant,
  ZeroSpan,
  DegenerateScalar,
  NotPGroup,
  NoCommonFixedLine,
  NotFixed,
  SyntaxError,
  Overflow,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ReducibleInput: return "ReducibleInput";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::ZeroSpan: return "ZeroSpan";
    case ErrorCode::DegenerateScalar: return "DegenerateScalar";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::NoCommonFixedLine: return "NoCommonFixedLine";
    case ErrorCode::NotFixed: return "NotFixed";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parser failure; position is a 0-based byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace glfix
