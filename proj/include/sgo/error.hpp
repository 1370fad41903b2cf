#pragma once

#include <stdexcept>
#include <string>

namespace sgo {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An order or ideal failed a structural check (closure, diagonal, support).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotHereditary : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An operation needing a prime (single block) identity component got a
/// semiprime one.
class NotPrimeContext : public Error {
 public:
  using Error::Error;
};

/// A place outside what an operation supports (ramified, maximal, ...).
class UnsupportedPlace : public Error {
 public:
  using Error::Error;
};

class NoMatchingPower : public Error {
 public:
  using Error::Error;
};

class NotFiniteOrder : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal cross-check fails; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgo
