#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pdc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors or rows whose lengths do not match the ambient dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A point lies outside the set an operation requires it to be in
/// (for example a subdifferential requested outside the domain).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition is violated by its inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The containment hypotheses required by the solution-set decomposition
/// (C inside dom g, C inside int(dom h)) do not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document. Carries a location: either a line/column pair
/// for syntax errors or a JSON pointer for semantic ones.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  ParseError(const std::string& message, const std::string& pointer)
      : Error(message + " at " + (pointer.empty() ? std::string("/") : pointer)),
        pointer_(pointer) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& pointer() const { return pointer_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
  std::string pointer_;
};

}  // namespace pdc
