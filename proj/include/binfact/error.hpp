#pragma once

#include <stdexcept>
#include <string>

namespace binfact {

// Argument outside the mathematical domain of an operation (b < 2, p > n, alpha > 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Query beyond what a PrimeTable was sieved for.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An exact-arithmetic identity failed. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace binfact
