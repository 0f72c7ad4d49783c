#pragma once

#include <stdexcept>
#include <string>

namespace qfchub {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wavelength or temperature outside a material model's published domain.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// Non-physical input (non-positive frequency, no first-order QPM solution, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index outside a finite set, e.g. a DeMux port number.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be non-zero vanished (zero success probability, zero trace).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// Tomography inputs do not span the operator space.
class SingularityError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qfchub
