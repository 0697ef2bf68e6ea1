#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad caller input: malformed group, out-of-range level/genus, unsupported combination.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Operands live in different cyclotomic fields or Clifford algebras.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A sine factor vanished. Never happens on admissible weight domains.
class ZeroFactor : public Error {
 public:
  using Error::Error;
};

/// A value that must be a rational integer was not. Always an upstream bug.
class IntegralityFailure : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because it exceeds a configured size bound.
class ResourceBound : public Error {
 public:
  using Error::Error;
};

class NotInCliffordGroup : public Error {
 public:
  using Error::Error;
};

}  // namespace verlinde
