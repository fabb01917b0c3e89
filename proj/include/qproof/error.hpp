#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qproof {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based; column 0 means the
/// error refers to the line as a whole.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// A variable that the quantifier prefix does not bind.
class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(unsigned var);
  unsigned var() const { return var_; }

 private:
  unsigned var_;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qproof
