#pragma once

#include <stdexcept>
#include <string>

namespace tqa {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands of incompatible dimension (matrix sizes, qubit counts, angle vectors).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (n = 0, t outside [0, T], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed Pauli-sum file, thetas file or experiment config.
class ParseError : public Error {
 public:
  ParseError(const std::string& origin, int line, const std::string& what)
      : Error(origin + (line > 0 ? ":" + std::to_string(line) : std::string{}) + ": " + what),
        origin_(origin),
        line_(line) {}

  const std::string& origin() const noexcept { return origin_; }
  int line() const noexcept { return line_; }

 private:
  std::string origin_;
  int line_;
};

// Integration or optimization produced an unusable result (trace drift,
// non-finite energy, broken state invariants).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tqa
