#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace embedkit {

// Input violates a documented precondition (bad rotation, bad family parameters, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text input. line() is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A requested object provably does not exist (e.g. an orientable self-dual K_{6,6}).
class NonexistenceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An internal consistency check failed. Never a legitimate state for valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace embedkit
