#pragma once

#include <stdexcept>
#include <string>

namespace tpw {

/// Malformed input: bad indices, bad file contents, violated parameter windows.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oracle or search was asked to go beyond its hard size limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal postcondition failed. Always a bug, never bad user input.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tpw
