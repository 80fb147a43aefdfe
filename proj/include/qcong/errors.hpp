#pragma once

#include <stdexcept>
#include <string>

namespace qcong {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NonMonicDivisor : public Error {
 public:
  NonMonicDivisor() : Error("divisor is not monic") {}
};

class DivisionByZeroPoly : public Error {
 public:
  DivisionByZeroPoly() : Error("division by the zero polynomial") {}
};

/// Rational with a denominator divisible by 3 where a 3-adic residue was asked for.
class NotThreeIntegral : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

/// Raised when a psi table fails the symmetry/periodicity hypotheses.
/// `witness()` carries the first violation as "k,j" (j = 0: symmetry).
class PsiHypothesisViolated : public Error {
 public:
  PsiHypothesisViolated(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// An internal consistency check failed. Always a bug, never user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcong
