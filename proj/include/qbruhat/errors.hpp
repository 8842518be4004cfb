#pragma once

#include <stdexcept>
#include <string>

namespace qbruhat {

// A computed object failed one of the identities it must satisfy.  The anchor
// names the mathematical statement that was violated.
class invariant_violation : public std::logic_error {
 public:
  invariant_violation(std::string anchor, const std::string& what)
      : std::logic_error(anchor + ": " + what), anchor_(std::move(anchor)) {}
  const std::string& anchor() const { return anchor_; }

 private:
  std::string anchor_;
};

// The chosen dominant weight is too small to represent the requested piece faithfully.
class not_sufficiently_large : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbruhat
