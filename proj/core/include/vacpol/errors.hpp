#pragma once

#include <stdexcept>
#include <string>

namespace vacpol {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: malformed registry documents, out-of-range arguments,
/// violated preconditions.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Registry document could not be parsed; message carries the location.
class ParseError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// A quadrature or series failed to reach the requested tolerance.
/// `error_estimate()` is the accuracy that was actually achieved.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double error_estimate() const { return achieved_; }

private:
  double achieved_;
};

/// Evaluation hit the Landau pole: |1 - delta_pi| below the pole guard,
/// where eps0(k2) vanishes and alpha_eff diverges.
class PoleError : public Error {
public:
  using Error::Error;
};

} // namespace vacpol
