#pragma once

#include <stdexcept>
#include <string>

namespace qgeom {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent arguments: bad lengths, duplicate indices,
/// dimension mismatches, unparsable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Arguments are well formed but outside the mathematical domain of the
/// operation (zero state, unnormalized input to the measure).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The operation is not implemented for this input class, e.g. the dual of a
/// non-simplicial cone.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgeom
