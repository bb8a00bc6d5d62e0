#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvcastle {

// Byte offsets into an input string, start <= end.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries the offending span and what was expected.
struct ParseError : Error {
  ParseError(std::string message, SourceSpan where)
      : Error(std::move(message)), span(where) {}
  SourceSpan span;
};

// Syntactically valid input with an out-of-domain value (a < 2, part < 1, ...).
struct ValueError : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct UnsupportedA : Error {
  using Error::Error;
};

struct UnsupportedRep : Error {
  using Error::Error;
};

struct ArityMismatch : Error {
  using Error::Error;
};

struct NotASolution : Error {
  using Error::Error;
};

struct PositionOutOfRange : Error {
  using Error::Error;
};

struct NonPositiveResult : Error {
  using Error::Error;
};

struct DenominatorDivisibleByPrime : Error {
  using Error::Error;
};

}  // namespace pvcastle
