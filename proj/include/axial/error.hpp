#ifndef AXIAL_ERROR_HPP
#define AXIAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace axial {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  ParseError,
  ZeroDenominator,
  BadField,
  DimensionMismatch,
  NotIdempotent,
  NotAnIdeal,
  MissingForm,
  AxisNormZero,
  NotAnAxis,
  HasBetaPart,
  BadParameter,
  ForbiddenParameter,
  CharacteristicUnsupported,
  NotACongruence,
  TauMismatch,
  WrongOrbitStructure,
  NotJordan,
  Unidentified,
  CharThree,
  NOddRequired,
  CapExceeded,
  MissingRealizer,
  WrongAxet,
  BadLabel,
  Internal,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace axial

#endif
