#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pauli {

// Base of every error raised by the library. Callers that only care about
// "something was wrong with the input" can catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  // position is 1-based, pointing at the offending character
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Operands with incompatible site counts or dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Requested object exceeds a configured cap (dense cap, enumeration cap, ...).
class SizeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Input that is well-formed but leads to a degenerate object (zero vector,
// empty projector).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure failed to reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pauli
