#pragma once

#include <stdexcept>
#include <string>

namespace bpe {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed discriminant, composite modulus, out-of-range bound.
class InputError : public Error {
 public:
  using Error::Error;
};

// A theorem hypothesis does not hold for the requested parameters.
// Expected and common (e.g. an ineligible (d, ell) pair).
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

// Requested combination is outside what the build supports.
class CapabilityError : public InputError {
 public:
  using InputError::InputError;
};

// Arithmetic outside the domain of an operation (non-invertible element,
// mismatched moduli or quadratic fields).
class DomainError : public InputError {
 public:
  using InputError::InputError;
};

// A series coefficient was requested beyond the known truncation order.
class TruncationError : public InputError {
 public:
  using InputError::InputError;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Always indicates a bug or a precision failure.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bpe
