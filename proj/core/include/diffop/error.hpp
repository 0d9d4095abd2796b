#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diffop {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text could not be parsed. position is a 0-based offset into the text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A mathematical precondition on the input data does not hold: the ideal is
// the unit ideal, the quotient is zero-dimensional, or a zero-divisor
// witness was found.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace diffop
