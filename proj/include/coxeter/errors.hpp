#pragma once

#include <stdexcept>
#include <string>

namespace coxeter {

/// Malformed user input: bad Coxeter matrix, unparsable group file, bad word.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (non-sink flip, non-admissible
/// sequence, theorem hypothesis not met, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A vector expected to be a root has coordinates of both strict signs.
class NotARootError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace coxeter
