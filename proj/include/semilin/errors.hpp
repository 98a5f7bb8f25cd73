#pragma once

#include <stdexcept>
#include <string>

namespace semilin {

// Bad user input (malformed spec files, violated preconditions the caller
// controls). CLI exit code 2.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration or search exceeded its configured budget. CLI exit code 3.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified internal invariant failed. CLI exit code 4.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace semilin
