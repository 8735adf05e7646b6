#pragma once

#include <stdexcept>
#include <string>

namespace k3cliff {

// Precondition or range violation; the message names the violated bound.
class RangeError : public std::domain_error {
 public:
  explicit RangeError(const std::string& what) : std::domain_error(what) {}
};

// A certificate cross-check failed. This never happens on legal inputs and
// signals an implementation bug, not a user error.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace k3cliff
