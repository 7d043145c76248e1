#pragma once

#include <stdexcept>
#include <string>

namespace geq {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (group files, equations, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A table or generating set that does not describe a group.
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's preconditions.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured cap or budget was reached before an answer was produced.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace geq
