#pragma once

#include <stdexcept>
#include <string>

namespace hypercert {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma-function argument at (or within 1e-12 of) a nonpositive integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Lower hypergeometric parameter w at a pole of (w)_n.
class ParamPoleError : public PoleError {
 public:
  using PoleError::PoleError;
};

class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the supported domain (|z| > r_max, bad tolerance, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Two-sided Fox-Wright bound requested for moments that fail the validity test.
class ValidityError : public Error {
 public:
  using Error::Error;
};

class ZeroArgumentError : public Error {
 public:
  using Error::Error;
};

class InvalidPairError : public Error {
 public:
  using Error::Error;
};

/// Quotient functional with a denominator of modulus below the alert threshold.
class DenominatorError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercert
