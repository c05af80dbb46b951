#pragma once

#include <stdexcept>
#include <string>

namespace plasmonpair {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV rows, config lines, flag values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain where a quantity is defined,
/// e.g. a wavelength outside a tabulated range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The physics has no solution for the requested configuration
/// (no prism coupling, unmatchable geometry, resonance pole, ...).
class PhysicsError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to converge or produced a non-finite value.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace plasmonpair
