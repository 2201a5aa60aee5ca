#pragma once

#include <stdexcept>
#include <string>

namespace virtstring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arrow-list text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument (arrow id, move site, sign, ...) does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of states. Carries no verdict about the question asked.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Matrix too large for the exhaustive canonicalizer.
class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace virtstring
