#pragma once

#include <stdexcept>
#include <string>

namespace starcomp {

/// Base class of every domain error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// mu is a root of the minimal polynomial of the complement's adjacency.
class MuIsEigenvalue : public Error {
 public:
  using Error::Error;
};

/// A K_{t,s} tag does not describe the supplied complement.
class BadTag : public Error {
 public:
  using Error::Error;
};

/// A size cap was exceeded (canonical form order, candidate count, ...).
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// The requested enumeration has infinitely many answers without a cap.
class Unbounded : public Error {
 public:
  using Error::Error;
};

class MalformedGraph6 : public Error {
 public:
  using Error::Error;
};

/// Two star-set vertices share an H-neighbourhood where that is impossible.
class DuplicateNeighbourhood : public Error {
 public:
  using Error::Error;
};

class DivisibilityViolation : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

/// Operands live in different quadratic fields, or a degree > 2 number was requested.
class FieldError : public Error {
 public:
  using Error::Error;
};

}  // namespace starcomp
