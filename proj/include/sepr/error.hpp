#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sepr {

/// Malformed text input. `line` and `column` are zero-based; for single-line
/// inputs `column` is the character offset of the first bad token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An argument violates an operation's precondition (size guard, reducible
/// input where irreducible is required, index out of range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result contradicts a proved statement. Seeing one of these
/// means there is a bug in the toolkit.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sepr
