#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace houghlp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No constraints were supplied.
class EmptyProblem : public Error {
 public:
  EmptyProblem() : Error("empty problem: at least one constraint is required") {}
};

// NaN or infinity in an input coefficient or coordinate.
class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

// Arguments outside an operation's domain (lo > hi, n == 0, overflowing
// coordinate differences, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An algorithm invariant did not hold. Indicates a bug, not bad input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MixedArity : public ParseError {
 public:
  MixedArity(std::size_t line, std::size_t expected, std::size_t got)
      : ParseError(line, "mixed arity: expected " + std::to_string(expected) +
                             " fields, got " + std::to_string(got)) {}
};

}  // namespace houghlp
