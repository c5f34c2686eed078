#pragma once

#include <stdexcept>
#include <string>

namespace sf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit (cap mismatch, non-square matrix, bad weight count).
struct StructuralError : Error {
  using Error::Error;
};

struct NonInvertibleError : Error {
  using Error::Error;
};

// A series quotient that is not a genuine series, or a zero divisor.
struct DivisionError : Error {
  using Error::Error;
};

struct ConversionError : Error {
  using Error::Error;
};

struct ResourceError : Error {
  using Error::Error;
};

// A mathematical identity that was expected to hold did not.
struct VerificationError : Error {
  using Error::Error;
};

}  // namespace sf
