#include "diophant/error.hpp"

namespace diophant {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonInjectiveMap: return "NonInjectiveMap";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadIndexSet: return "BadIndexSet";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::RingLiteralError: return "RingLiteralError";
    case ErrorCode::UnsupportedConnective: return "UnsupportedConnective";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::PeriodExhausted: return "PeriodExhausted";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::MalformedTemplate: return "MalformedTemplate";
    case ErrorCode::ExhaustionBudgetExceeded: return "ExhaustionBudgetExceeded";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::RingLiteralError:
      return ErrorCategory::Parse;
    case ErrorCode::InternalInconsistency:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Validation;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

SyntaxError::SyntaxError(ErrorCode code, const std::string& message, std::size_t line,
                         std::size_t column)
    : Error(code, message + " (line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace diophant
