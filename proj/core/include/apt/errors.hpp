#pragma once

#include <stdexcept>
#include <string>

namespace apt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// m is not square-free or not greater than 3.
class InvalidModulus : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Half-integral coordinates requested where the ring has none, or u and v
/// of different parity.
class ParityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// (a, b, c) does not satisfy a^2 + m*b^2 = c^2 for the modulus in use.
class NotASolution : public DomainError {
 public:
  using DomainError::DomainError;
};

class DiscriminantMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A basis element is required for a prime outside the enumerated range.
class BasisUnavailable : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace apt
