#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgt {

/// An enumeration was asked for more elements than its cap allows.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::uint64_t required, std::uint64_t cap)
      : std::runtime_error("element cap exceeded: need " + std::to_string(required) +
                           ", cap " + std::to_string(cap)),
        required(required), cap(cap) {}

  std::uint64_t required;
  std::uint64_t cap;
};

/// A bounded search ran out of budget before reaching a certified answer.
/// Partial results carried by the thrower are not usable as certificates.
class SearchBudgetExceeded : public std::runtime_error {
public:
  explicit SearchBudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

} // namespace cgt
