#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "facinv/error.hpp"

namespace facinv {

/// Step counter for the completion loops (Hilbert bases, Buchberger).
/// A default-constructed budget is unlimited. Not thread-safe: one budget
/// per computation.
class Budget {
 public:
  Budget() = default;
  explicit Budget(std::uint64_t max_steps) : limit_(max_steps) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (limit_ && used_ > *limit_) {
      throw ResourceLimitExceeded("step budget of " + std::to_string(*limit_) +
                                  " exhausted");
    }
  }

  [[nodiscard]] std::uint64_t used() const noexcept { return used_; }
  [[nodiscard]] std::optional<std::uint64_t> limit() const noexcept {
    return limit_;
  }

 private:
  std::optional<std::uint64_t> limit_;
  std::uint64_t used_ = 0;
};

inline void charge(Budget* budget, std::uint64_t steps = 1) {
  if (budget != nullptr) budget->charge(steps);
}

}  // namespace facinv
