#pragma once

#include <stdexcept>
#include <string>

namespace semicat {

// Everything thrown on bad user input: malformed tables, arguments of the
// wrong structure class, instances too large for the configured budgets.
// The command line tool maps these to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal guarantee: a postcondition that is supposed to hold by
// a theorem failed on a concrete instance.  Mapped to exit code 1.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotClosed : InputError {
  using InputError::InputError;
};
struct NotAssociative : InputError {
  using InputError::InputError;
};
struct NotAGroup : InputError {
  using InputError::InputError;
};
struct NotAMonoid : InputError {
  using InputError::InputError;
};
struct NotInverse : InputError {
  using InputError::InputError;
};
struct NotRegular : InputError {
  using InputError::InputError;
};
struct NoZero : InputError {
  using InputError::InputError;
};
struct NotACongruence : InputError {
  using InputError::InputError;
};
struct NotAnIdeal : InputError {
  using InputError::InputError;
};
struct NotAnAction : InputError {
  using InputError::InputError;
};
struct InvalidTriple : InputError {
  using InputError::InputError;
};
struct TrivialSummand : InputError {
  using InputError::InputError;
};
struct SearchBudgetExceeded : InputError {
  using InputError::InputError;
};
struct TupleSpaceTooLarge : InputError {
  using InputError::InputError;
};
struct SummandNotCompletely0Simple : CheckError {
  using CheckError::CheckError;
};

}  // namespace semicat
