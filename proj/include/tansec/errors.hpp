#pragma once

#include <stdexcept>
#include <string>

namespace tansec {

/// A caller-side precondition failed (bad index, pole, precision too small).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The evaluation point lies within tolerance of a pole of the function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series division hit a denominator that is numerically zero.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An internal mathematical invariant was violated. These indicate bugs in
/// the library (corrupted triangles, parity mistakes), never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A formula that must produce a real value produced a nonzero imaginary part.
class NonRealResult : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

}  // namespace tansec
