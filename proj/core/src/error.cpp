#include "menichetti/error.hpp"

namespace menichetti {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInBase: return "NotInBase";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::NotAbelian: return "NotAbelian";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotFixed: return "NotFixed";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::BadAutomorphism: return "BadAutomorphism";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::DependentPrimitive: return "DependentPrimitive";
    case ErrorCode::WrongGroup: return "WrongGroup";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::InfiniteField: return "InfiniteField";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NucleusViolation: return "NucleusViolation";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::NotSpecialPattern: return "NotSpecialPattern";
    case ErrorCode::DependentPowers: return "DependentPowers";
    case ErrorCode::NonBaseCoefficient: return "NonBaseCoefficient";
  }
  return "Error";
}

}  // namespace menichetti
