#pragma once

#include <stdexcept>
#include <string>

namespace vmlattice {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPrime : public DomainError {
 public:
  using DomainError::DomainError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

class LengthMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class WeightSumError : public DomainError {
 public:
  using DomainError::DomainError;
};

class Overflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// A computed quantity violated an identity it must satisfy (e.g. a squared
// error more negative than rounding can explain).
class NumericalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vmlattice
