#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zbeta {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed expression or PD text. `position` is a byte offset into the input.
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by the zero rational function") {}
};

struct LabelError : Error {
  using Error::Error;
};

// sw at a position where 1 + alpha vanishes identically.
struct SingularSwap : Error {
  using Error::Error;
};

struct ValidationError : Error {
  ValidationError(const std::string& what, long edge) : Error(what), edge(edge) {}
  long edge;
};

struct OrientationError : Error {
  using Error::Error;
};

struct MultiComponentError : Error {
  using Error::Error;
};

struct NonMonomialDenominator : Error {
  using Error::Error;
};

}  // namespace zbeta
