#pragma once

#include <stdexcept>
#include <string>

namespace weyr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (matrix sizes, ambient dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input: scalars, vectors, block specs, JSON files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its mathematical domain
/// (singular pencil, point that is not a resolvent point, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace weyr
