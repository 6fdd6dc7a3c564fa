#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace padicfft {

enum class ErrorCode {
  // Caller violated a mathematical precondition.
  NonUnit,
  ParentMismatch,
  NotPrime,
  NotCoprime,
  ZeroInput,
  OutOfRange,
  DegreeTooSmall,
  BadInput,
  EvenCharacteristic,
  EvenPrime,
  NotAFactor,
  PreconditionFailed,
  BezoutFailure,
  NotCoprimeFactors,
  RootNotPrimitive,
  PrecisionTooLow,
  LengthMismatch,
  DegreeOverflow,
  FactoringFailure,
  NotConstant,
  // Malformed textual input.
  ParseError,
  // Something that should be impossible happened.
  OrbitNotClosed,
  CoefficientNotRational,
  RandomnessFailure,
  InternalInvariant,
};

enum class ErrorKind { Usage, Precondition, Internal };

std::string_view error_code_name(ErrorCode code);
ErrorKind error_kind(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorKind kind() const { return error_kind(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace padicfft
