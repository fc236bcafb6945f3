#pragma once

#include <stdexcept>
#include <string>

namespace menon {

/// Argument outside the mathematical domain of an operation (n = 0, s = 0,
/// non-prime p, mismatched moduli, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input inside the domain but beyond the desk-scale bounds this library
/// commits to.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An internal consistency check failed: a sum that must be an integer was
/// not, or a reproduced value differs from its known value.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace menon
