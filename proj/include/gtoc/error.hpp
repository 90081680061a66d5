#pragma once

#include <stdexcept>
#include <string>

namespace gtoc {

/// Bad input: malformed permutation text, size mismatch, index out of range.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematically meaningful refusal, e.g. u is not below w in Bruhat
/// order, or n exceeds what an enumeration is allowed to handle.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Seeing this means either a bug or a
/// counterexample to a result the computation relies on.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail_invariant(const std::string& what) {
  throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace gtoc
