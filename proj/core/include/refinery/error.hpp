#pragma once

#include <stdexcept>
#include <string>

namespace refinery {

// All contract violations (bad input, cap overflow, malformed text) throw this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace refinery
