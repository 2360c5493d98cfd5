#pragma once

#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An element was used with a group or ring it does not belong to.
struct MismatchError : Error {
  using Error::Error;
};

/// A structure-constant table violates the additive-order condition
/// (the order of e_i*e_j must divide gcd(d_i, d_j)).
struct WellDefinednessViolation : Error {
  using Error::Error;
};

/// A structure-constant table fails associativity on some basis triple;
/// the message names the witnessing triple.
struct AssociativityViolation : Error {
  using Error::Error;
};

/// A set that must be closed under an operation is not. For commutator
/// sets [x,R] this indicates an implementation bug, not bad input.
struct ClosureViolation : Error {
  using Error::Error;
};

/// The subset passed to a quotient-ring construction is not a two-sided ideal.
struct NotAnIdeal : Error {
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
/// Always a bug signal; never user error.
struct InternalMismatch : Error {
  using Error::Error;
};

/// An enumeration was requested on an object above the configured cap.
struct CapExceeded : Error {
  using Error::Error;
};

/// A witness search exhausted its candidate budget before deciding.
struct SearchBudgetExceeded : Error {
  using Error::Error;
};

/// A ring-spec document failed to parse; carries the offending line.
struct SpecSyntaxError : Error {
  int line;
  SpecSyntaxError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace ringlab
