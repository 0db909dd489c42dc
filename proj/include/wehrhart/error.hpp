#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wehrhart {

enum class ErrorKind {
  DuplicateNode,
  ArityMismatch,
  ExponentOverflow,
  NotFullDimensional,
  DegenerateInput,
  TooManyVertices,
  EnumerationBudgetExceeded,
  BudgetExceeded,
  NotEulerian,
  NotGraded,
  UnknownFace,
  NotClosedSubcomplex,
  Inconsistent,
  NonIntegralBetti,
  NotSimple,
  UnsupportedDimension,
  ParseError,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::TooManyVertices: return "TooManyVertices";
    case ErrorKind::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotEulerian: return "NotEulerian";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::NotClosedSubcomplex: return "NotClosedSubcomplex";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NonIntegralBetti: return "NonIntegralBetti";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `what()` starts with the kind name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wehrhart
