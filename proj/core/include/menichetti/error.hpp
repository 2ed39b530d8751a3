#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace menichetti {

enum class ErrorCode {
  Parse,
  FieldMismatch,
  DivisionByZero,
  NotInBase,
  NotIrreducible,
  Unsupported,
  NotAnAutomorphism,
  NotAGroup,
  NotAbelian,
  IndexOutOfRange,
  ZeroParameter,
  DimensionMismatch,
  NotASubgroup,
  NotFixed,
  NotAssociative,
  NoUnit,
  NotCentral,
  NotSimple,
  BadAutomorphism,
  NotAHomomorphism,
  PatternMismatch,
  DependentPrimitive,
  WrongGroup,
  CharTwo,
  WrongDegree,
  InfiniteField,
  BudgetExceeded,
  NonSquare,
  ZeroInput,
  NucleusViolation,
  CenterMismatch,
  NotSpecialPattern,
  DependentPowers,
  NonBaseCoefficient,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace menichetti
