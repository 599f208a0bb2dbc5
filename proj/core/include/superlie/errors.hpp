#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace superlie {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a Grassmann algebra would exceed the configured generator budget.
class BudgetError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class NotAUnitError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace superlie
