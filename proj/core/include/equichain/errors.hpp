#pragma once

#include <stdexcept>
#include <string>

namespace equichain {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (group tables, complexes, documents).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Well-formed input violating a mathematical invariant (group axioms,
/// d^2 = 0).
class ValidationError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A sampled precondition of an operation does not hold.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// A cycle filler produced a chain whose boundary is not the requested cycle,
/// or was handed something that is not a cycle of the expected subcomplex.
class FillerError : public Error {
 public:
  using Error::Error;
};

/// A request for data beyond the degree a lazy structure was truncated at.
class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace equichain
