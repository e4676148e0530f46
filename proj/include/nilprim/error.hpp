#pragma once

#include <stdexcept>
#include <string>

namespace nilprim {

/// Bad input: parameters outside a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search, closure or sweep would exceed its configured budget. The
/// caller must treat the question as undecided, never as a negative answer.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group lies outside the nilpotent family handled by the recognisers.
class NotInFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilprim
