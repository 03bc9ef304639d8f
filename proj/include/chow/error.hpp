#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chow {

/// Base of all errors caused by bad input (malformed expressions, mismatched
/// towers, non-unit division). The CLI maps these to exit code 1.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public UserError {
 public:
  ParseError(std::size_t position, const std::string& message)
      : UserError("parse error at " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownSymbolError : public ParseError {
 public:
  UnknownSymbolError(std::size_t position, std::string name)
      : ParseError(position, "unknown symbol '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class TowerMismatchError : public UserError {
 public:
  using UserError::UserError;
};

class DegreeError : public UserError {
 public:
  using UserError::UserError;
};

/// Division by a class whose degree-0 part is zero or parameter-valued.
class NonUnitError : public UserError {
 public:
  using UserError::UserError;
};

/// The closed-form pushforward does not apply (trivial or symbolic bundle).
class InapplicableError : public UserError {
 public:
  using UserError::UserError;
};

/// Raised when an internal consistency check fails. Exit code 2 in the CLI.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chow
