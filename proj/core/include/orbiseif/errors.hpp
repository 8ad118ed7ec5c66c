#pragma once

#include <stdexcept>
#include <string>

namespace orbiseif {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mixing a circle-type element with an algebraic quaternion in one product.
class RepresentationMismatch : public Error {
 public:
  using Error::Error;
};

// The left factor of a pair is not circle-type, so no Hopf base action exists.
class NotHopfPreserving : public Error {
 public:
  using Error::Error;
};

class SnapFailure : public Error {
 public:
  using Error::Error;
};

// A quantity that must exist for valid input did not (bad formula or bug).
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace orbiseif
