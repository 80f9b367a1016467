#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace engelkit {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Bad constructor arguments, malformed elements, invalid actions.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

class CrossGroupError : public Error {
public:
  CrossGroupError() : Error("operands belong to different groups") {}
};

// An enumeration-dependent operation would exceed its configured cap.
class CapacityError : public Error {
public:
  using Error::Error;
};

class InfiniteGroupError : public CapacityError {
public:
  explicit InfiniteGroupError(const std::string &what)
      : CapacityError(what + ": group is infinite") {}
};

// A closure that was expected to be finite kept growing past its guard.
class DivergenceError : public CapacityError {
public:
  using CapacityError::CapacityError;
};

} // namespace engelkit
