#pragma once

#include <stdexcept>
#include <string>

namespace dgalab {

// Error taxonomy. CLI maps InputError/CapError -> exit 2,
// InvariantViolation/VerificationFailure/GuardViolation -> exit 1.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or out-of-contract input: bad JSON, non-prime modulus,
// dimension mismatches caught at construction, unparsable polynomials.
struct InputError : Error {
  explicit InputError(const std::string& msg) : Error(msg) {}
};

// Two scalars/objects over different fields were combined.
struct FieldMismatchError : InputError {
  explicit FieldMismatchError(const std::string& msg) : InputError(msg) {}
};

// A documented size/step cap was exceeded (dim <= 400, resolve N <= 24, ...).
struct CapError : InputError {
  explicit CapError(const std::string& msg) : InputError(msg) {}
};

// A mathematical invariant that should hold failed at runtime
// (non-associative table, d*d != 0, failed verification of a witness).
struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& msg) : Error(msg) {}
};

// A constructive verification step did not confirm (e.g. no suitable cycle).
struct VerificationFailure : InvariantViolation {
  explicit VerificationFailure(const std::string& msg) : InvariantViolation(msg) {}
};

// The truncated power-series guard was hit: a computation would have
// touched a degree at or beyond the truncation bound.
struct GuardViolation : Error {
  explicit GuardViolation(const std::string& msg) : Error(msg) {}
};

}  // namespace dgalab
