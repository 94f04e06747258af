#pragma once

#include <stdexcept>
#include <string>

namespace parity {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates the general-position assumption (collinear triple, a ray
/// through a vertex, a vertex in the interior of a segment).
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Too few elements for the requested operation.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but outside the class an operation supports
/// (not a path, not in convex position, not pseudoconvex, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A cycle, face structure or dual tree is inconsistent.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// Odd number of unhappy vertices where an even number is required.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// A generator could not produce an instance with the requested property.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON or a file that cannot be read or written.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace parity
