#pragma once

#include <stdexcept>
#include <string>

namespace chainsub {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live over different rings") {}
  explicit RingMismatch(const std::string& what) : Error(what) {}
};

class ParentMismatch : public Error {
 public:
  ParentMismatch() : Error("submodules have different ambient modules") {}
  explicit ParentMismatch(const std::string& what) : Error(what) {}
};

class DecompositionFailed : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ConstraintViolated : public Error {
 public:
  using Error::Error;
};

class NotKAlgebra : public Error {
 public:
  using Error::Error;
};

/// The object does not lie in the interval [I, J] for the requested rank;
/// the message names the failing condition.
class NotInInterval : public Error {
 public:
  using Error::Error;
};

class SummandObstruction : public Error {
 public:
  SummandObstruction(std::string simple, int multiplicity)
      : Error("representation has a simple injective summand " + simple),
        simple_(std::move(simple)),
        multiplicity_(multiplicity) {}

  const std::string& simple() const { return simple_; }
  int multiplicity() const { return multiplicity_; }

 private:
  std::string simple_;
  int multiplicity_;
};

}  // namespace chainsub
