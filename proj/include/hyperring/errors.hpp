#pragma once

#include <stdexcept>
#include <string>

namespace hyperring {

// Malformed input: ragged tables, out-of-range indices, unknown labels.
// Distinct from an axiom failure, which is reported, not thrown.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (unverified ring,
// improper ideal, mixed carriers, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent decision procedures disagreed. Never resolved silently.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hyperring
