#pragma once

#include <stdexcept>
#include <string>

namespace cx1 {

// Every error raised by the library derives from Error so callers (the CLI in
// particular) can separate library failures from unexpected ones.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class StarConditionError : public Error {
 public:
  using Error::Error;
};

class ColoringError : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal identity that must hold by construction fails.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace cx1
