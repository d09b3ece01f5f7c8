#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input or an operation whose stated precondition does not hold.
class ValidationError : public Error {
public:
  using Error::Error;
};

class PreconditionError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// The complex handed to the reconstruction code is not t_w(Lambda) for any positive word.
class NotATwistImage : public Error {
public:
  using Error::Error;
};

// Internal consistency check failed. Never expected on valid input.
class InvariantBreach : public Error {
public:
  using Error::Error;
};

}  // namespace twistlab
