#pragma once

#include <stdexcept>
#include <string>

namespace eqzeta {

/// Raised for invalid inputs: malformed tables, non-commuting maps, bad
/// documents. The message is meant for end users.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two ring elements built over different groups were combined.
class GroupMismatch : public std::logic_error {
 public:
  GroupMismatch() : std::logic_error("operands belong to different groups") {}
};

}  // namespace eqzeta
