#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpa {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries a 1-based line/column when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), detail_(what), line_(line), column_(column) {}

  /// The message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that names something that does not exist or violates a
/// structural invariant (unknown vertex, duplicate edge record, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (A not contained in B, improper
/// ideal where a proper one is required, non-normalized polynomial, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured candidate bound.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lpa
