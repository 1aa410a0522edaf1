#pragma once

#include <stdexcept>
#include <string>

namespace lobcast {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge list does not describe a connected acyclic graph on dense ids.
class TreeStructureError : public Error {
 public:
  using Error::Error;
};

// Fewer than five vertices; no lobster of interest is that small.
class TooSmallError : public Error {
 public:
  using Error::Error;
};

// Leaf stripping leaves nothing usable as a spine (fewer than three
// non-leaf vertices; a lone vertex or a single edge is not a caterpillar).
class EmptySpineError : public Error {
 public:
  using Error::Error;
};

// Second-level stripping leaves something other than a path.
class NotALobsterError : public Error {
 public:
  using Error::Error;
};

// Instance description violates the spec schema; message carries the
// offending field path, e.g. "subtrees[2].branches".
class SpecViolationError : public Error {
 public:
  using Error::Error;
};

// Operation called for the wrong spine length.
class WrongLengthError : public Error {
 public:
  using Error::Error;
};

// A constructed broadcast failed one of its always-on self checks.
// Signals an implementation bug, never a property of the input.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// The two value decompositions disagree; implementation bug signal.
class DecompositionMismatchError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds the exact solver's hard vertex cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Generator parameter ranges cannot fit the vertex budget.
class UnsatisfiableError : public Error {
 public:
  using Error::Error;
};

}  // namespace lobcast
