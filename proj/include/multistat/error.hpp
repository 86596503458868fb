#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multistat {

enum class ErrorCode {
  ConstantPair,
  DegreeTooLow,
  ZeroPoly,
  NoNonnegativeBasis,
  CaseSplitRequired,
  StuckNoLinearPivot,
  DenominatorStraddlesZero,
  ResultantVanishes,
  NotBivariate,
  NotLinear,
  SpecializationCollapse,
  LawsNotSolvable,
  SyntaxError,
  UndeclaredSymbol,
  DuplicateDeclaration,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can dispatch on the condition rather than the text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures also report where they happened (1-based).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, int line, int column)
      : Error(code, what + " at line " + std::to_string(line) + ", column " +
                        std::to_string(column)),
        message_(what),
        line_(line),
        column_(column) {}

  /// The message without code and position.
  const std::string& message() const noexcept { return message_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

}  // namespace multistat
