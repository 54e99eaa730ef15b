#pragma once

#include <stdexcept>
#include <string>

namespace aeu {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two values from different semiring instances were combined.
struct InstanceMismatchError : Error {
  using Error::Error;
};

/// Caller-supplied data is invalid (unknown name, bad file, malformed flag).
struct InputError : Error {
  using Error::Error;
};

/// A stated precondition of an operation does not hold for the arguments.
struct PreconditionError : Error {
  using Error::Error;
};

/// A construction or algebraic invariant failed at runtime. Seeing this on a
/// shipped instance means the instance itself is broken, not the input.
struct InvariantViolation : Error {
  using Error::Error;
};

/// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
  using Error::Error;
};

/// Parse failure with file/location context.
struct ParseError : InputError {
  ParseError(std::string file, std::string detail)
      : InputError(file + ": " + detail), file(std::move(file)) {}
  std::string file;
};

}  // namespace aeu
