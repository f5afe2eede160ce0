#pragma once

#include <stdexcept>
#include <string>

namespace zetakit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of the requested representation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// s too close to the simple pole of the Hurwitz zeta function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A kernel hit max_terms before reaching its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

/// Requested digits unreachable within max_terms.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetakit
