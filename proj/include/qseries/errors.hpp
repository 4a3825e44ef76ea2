#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed series construction or an operation with invalid arguments.
class SeriesError : public Error {
 public:
  using Error::Error;
};

/// Raised by invert() when every stored coefficient is zero.
class InvertError : public SeriesError {
 public:
  using SeriesError::SeriesError;
};

/// A parameter point that violates an identity's parameter contract.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A term stream that does not converge formally, or a Cesàro stream that
/// does not stabilize.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qseries
