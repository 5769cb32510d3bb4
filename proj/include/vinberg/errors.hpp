#pragma once

#include <stdexcept>
#include <string>

namespace vinberg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point lies outside the domain of a function (e.g. x not in the open cone).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A linear fractional map is undefined at the requested point, or a matrix
/// that must be inverted is singular.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// A matrix left its required block pattern beyond round-off.
class PatternError : public Error {
 public:
  using Error::Error;
};

/// A matrix is not a member of the group or semigroup an operation requires.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue lies on the closed negative real axis, so the principal
/// logarithm does not exist.
class SpectrumError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree produced different answers.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace vinberg
