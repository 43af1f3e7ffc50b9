#pragma once

#include <stdexcept>
#include <string>

namespace eisenfold {

// Input outside an operation's domain (zero beta, non-primitive beta, r >= 1, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure could not reach a verified answer within its budget.
class UndeterminedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Broken internal invariant: a partition that does not cover, a pairing that
// is not an involution, a propagation contradiction on a good coloring.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace eisenfold
