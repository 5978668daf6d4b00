#pragma once

#include <stdexcept>
#include <string>

namespace orbitlang {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A modulus that failed the primality check.
class NotPrime : public Error {
 public:
  using Error::Error;
};

/// Inversion of the zero residue.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// Two operands carry different moduli.
class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

/// Two vector pairs have different lengths (or moduli) where equal shapes are required.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A letter outside the alphabet [0, p^2).
class InvalidLetter : public Error {
 public:
  using Error::Error;
};

/// A well-formed word that is not a member of the language.
class NotInLanguage : public Error {
 public:
  using Error::Error;
};

/// A computation whose state space exceeds the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A constructor argument that violates a type invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed; indicates a bug, never bad input.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitlang
