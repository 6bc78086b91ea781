// Error taxonomy. Every failure mode the kit reports is one of these kinds,
// so the CLI can map exceptions to exit codes without string matching.
#pragma once

#include <stdexcept>
#include <string>

namespace branchkit {

enum class ErrorKind {
  UnsupportedType,
  DimensionBound,
  DimensionMismatch,
  AmbientMismatch,
  NotContained,
  ShapeMismatch,
  NotAutomorphism,
  NotInvolutive,
  NonCommuting,
  NotThetaFixed,
  NotInCartan,
  NotSubalgebra,
  NotStable,
  NotDominant,
  CoordinateMismatch,
  BasisMismatch,
  BudgetExceeded,
  DegenerateSplit,
  CertificationFailed,
  HypothesisViolated,
  CriteriaDisagree,
  EqualityViolated,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::DimensionBound: return "DimensionBound";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotInvolutive: return "NotInvolutive";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NotThetaFixed: return "NotThetaFixed";
    case ErrorKind::NotInCartan: return "NotInCartan";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::CoordinateMismatch: return "CoordinateMismatch";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegenerateSplit: return "DegenerateSplit";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::CriteriaDisagree: return "CriteriaDisagree";
    case ErrorKind::EqualityViolated: return "EqualityViolated";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace branchkit
