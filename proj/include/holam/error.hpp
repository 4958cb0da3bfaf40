#pragma once

#include <stdexcept>
#include <string>

namespace holam {

enum class ErrorKind {
  UnboundVariable,
  TypeMismatch,
  IllTyped,
  TypeDisagreement,
  UnknownLetter,
  ArityMismatch,
  UnknownBuiltin,
  BadParameters,
  ResourceExhausted,
  SizeOverflow,
  SpaceMismatch,
  StateCountDecrease,
  NormalizationNeedsDefs,
  BudgetExhausted,
  NotWordType,
  NotTreeType,
  SyntaxError,
  Cancelled,
  BadFormat,
};

const char* to_string(ErrorKind kind);

/// Every domain failure in the library is reported through this exception.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure carrying a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace holam
