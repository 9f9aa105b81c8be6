#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evenmono {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("zero polynomial") {}
};

class ConstantPolynomial : public Error {
 public:
  ConstantPolynomial() : Error("polynomial must have degree >= 1") {}
};

class NonMonic : public Error {
 public:
  NonMonic() : Error("polynomial must be monic") {}
};

class NotIrreducible : public Error {
 public:
  NotIrreducible() : Error("polynomial must be irreducible over Q") {}
};

class ReducibleInput : public Error {
 public:
  ReducibleInput() : Error("even sextic is reducible over Q") {}
};

class DegreeMismatch : public Error {
 public:
  explicit DegreeMismatch(const std::string& what) : Error(what) {}
};

class DivisibilityViolation : public Error {
 public:
  DivisibilityViolation() : Error("c must divide n^2") {}
};

class DegenerateConductor : public Error {
 public:
  DegenerateConductor() : Error("conductor must be >= 3") {}
};

class ZeroDiscriminant : public Error {
 public:
  ZeroDiscriminant() : Error("polynomial has a repeated root") {}
};

/// Raised when a prime is too large for the word-size modular arithmetic.
class ModulusTooLarge : public Error {
 public:
  ModulusTooLarge() : Error("prime modulus exceeds 2^62") {}
};

/// An internal cross-check disagreed with itself.
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected)
      : Error("parse error at byte " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace evenmono
