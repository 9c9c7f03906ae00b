#include "axial/error.hpp"

namespace axial {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::BadField: return "BadField";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::MissingForm: return "MissingForm";
    case ErrorKind::AxisNormZero: return "AxisNormZero";
    case ErrorKind::NotAnAxis: return "NotAnAxis";
    case ErrorKind::HasBetaPart: return "HasBetaPart";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ForbiddenParameter: return "ForbiddenParameter";
    case ErrorKind::CharacteristicUnsupported: return "CharacteristicUnsupported";
    case ErrorKind::NotACongruence: return "NotACongruence";
    case ErrorKind::TauMismatch: return "TauMismatch";
    case ErrorKind::WrongOrbitStructure: return "WrongOrbitStructure";
    case ErrorKind::NotJordan: return "NotJordan";
    case ErrorKind::Unidentified: return "Unidentified";
    case ErrorKind::CharThree: return "CharThree";
    case ErrorKind::NOddRequired: return "NOddRequired";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::MissingRealizer: return "MissingRealizer";
    case ErrorKind::WrongAxet: return "WrongAxet";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace axial
