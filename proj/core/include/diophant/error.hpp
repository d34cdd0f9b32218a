#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diophant {

/// Every failure the library reports carries one of these codes.
enum class ErrorCode {
  RingMismatch,
  ArityMismatch,
  NonInjectiveMap,
  IndexOutOfRange,
  BadIndexSet,
  DomainError,
  SyntaxError,
  UnknownVariable,
  RingLiteralError,
  UnsupportedConnective,
  BothZero,
  PeriodExhausted,
  HypothesisFailure,
  MalformedTemplate,
  ExhaustionBudgetExceeded,
  InternalInconsistency,
};

/// Coarse grouping used by the command-line tool to pick an exit status.
enum class ErrorCategory { Validation, Parse, Internal };

std::string_view to_string(ErrorCode code);
ErrorCategory category_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

/// Parse failures keep the 1-based source position of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace diophant
