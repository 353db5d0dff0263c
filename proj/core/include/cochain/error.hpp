#pragma once

#include <stdexcept>
#include <string>

namespace cochain {

// Base class for every user-facing error raised by the library. Internal
// faults (violated postconditions) use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// d^{i+1} d^i != 0 somewhere.
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

// Some square d_B f != f d_A.
class InvalidChainMap : public Error {
 public:
  using Error::Error;
};

// Two complexes that must coincide (composition, triangle endpoints) differ.
class ObjectMismatch : public Error {
 public:
  using Error::Error;
};

class NotQuasiIsomorphism : public Error {
 public:
  using Error::Error;
};

// Input that is well-typed but violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace cochain
