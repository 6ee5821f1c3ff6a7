#pragma once

#include <stdexcept>
#include <string>

namespace qha {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values carry different group parameters (mixed moduli).
struct ParamMismatchError : Error {
  using Error::Error;
};

// The modulus is even or too small; half-phases need an odd modulus >= 3.
struct UnsupportedModulusError : Error {
  using Error::Error;
};

// A norm/integral exponent outside its admissible range.
struct InvalidExponentError : Error {
  using Error::Error;
};

// A dense assembly would exceed the configured size cap.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Malformed text input; `line` is 1-based.
struct ParseError : Error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

}  // namespace qha
