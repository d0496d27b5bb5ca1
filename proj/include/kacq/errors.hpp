#pragma once

#include <stdexcept>
#include <string>

namespace kacq {

enum class ErrorKind {
  PoleAtEvaluationPoint,
  NonzeroConstantTerm,
  ConstantTermNotOne,
  DimensionMismatch,
  ContractLoop,
  NotConnected,
  Not2Connected,
  ReflectionAtImaginaryVertex,
  InvalidType,
  UnsupportedField,
  CapExceeded,
  EndTooLargeForLocalityTest,
  NonGenericLambda,
  CharacteristicTooSmall,
  Parse,
  InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ContractLoop: return "ContractLoop";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::Not2Connected: return "Not2Connected";
    case ErrorKind::ReflectionAtImaginaryVertex: return "ReflectionAtImaginaryVertex";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::EndTooLargeForLocalityTest: return "EndTooLargeForLocalityTest";
    case ErrorKind::NonGenericLambda: return "NonGenericLambda";
    case ErrorKind::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace kacq
