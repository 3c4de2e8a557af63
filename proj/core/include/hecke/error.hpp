#pragma once

#include <stdexcept>
#include <string>

namespace hecke {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent parameter data.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's precondition (bad index, wrong case tag, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The multipartition is not a vertex of the requested good lattice.
class NotInLattice : public Error {
 public:
  using Error::Error;
};

/// An exact computation produced a value the theory rules out.
class ArithmeticInconsistency : public Error {
 public:
  using Error::Error;
};

/// Signals a bug: an invariant that the theory guarantees has been violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hecke
