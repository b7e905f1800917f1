#pragma once

#include <stdexcept>
#include <string>

namespace exwave {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidGrid : public Error {
 public:
  using Error::Error;
};

class UnsupportedSuperposition : public Error {
 public:
  using Error::Error;
};

class WrongKind : public Error {
 public:
  using Error::Error;
};

class SuperluminalBoost : public Error {
 public:
  using Error::Error;
};

class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

class RelativisticRecoil : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

// Raised when a residual is already at rounding level and no refinement
// ratio can be formed.
class OrderUndefined : public Error {
 public:
  using Error::Error;
};

}  // namespace exwave
