#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded (ideal enumeration, configuration enumeration).
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, std::size_t cap)
      : Error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// No power m^k with k <= bound equals +I or -I.
class NotPeriodic : public Error {
 public:
  explicit NotPeriodic(std::size_t bound)
      : Error("matrix is not periodic up to sign within k <= " + std::to_string(bound)),
        bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

/// An element (partition, label) was not found in a lattice.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed in the expected notation.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Machine-integer arithmetic would have overflowed; callers retry exactly.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace coxlab
