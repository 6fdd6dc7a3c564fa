#include "padicfft/error.hpp"

namespace padicfft {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BezoutFailure: return "BezoutFailure";
    case ErrorCode::NotCoprimeFactors: return "NotCoprimeFactors";
    case ErrorCode::RootNotPrimitive: return "RootNotPrimitive";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::FactoringFailure: return "FactoringFailure";
    case ErrorCode::NotConstant: return "NotConstant";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::OrbitNotClosed: return "OrbitNotClosed";
    case ErrorCode::CoefficientNotRational: return "CoefficientNotRational";
    case ErrorCode::RandomnessFailure: return "RandomnessFailure";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

ErrorKind error_kind(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return ErrorKind::Usage;
    case ErrorCode::OrbitNotClosed:
    case ErrorCode::CoefficientNotRational:
    case ErrorCode::RandomnessFailure:
    case ErrorCode::InternalInvariant:
      return ErrorKind::Internal;
    default:
      return ErrorKind::Precondition;
  }
}

}  // namespace padicfft
