#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "poim/term.hpp"

namespace poim {

// Labels starting with this prefix belong to the supply; the parsers refuse
// user blanks that use it.
inline constexpr std::string_view kFreshPrefix = "fresh";

// Allocates fresh blanks and variables as `<prefix><n>` with n counting up
// from `start + 1`. Not thread-safe: one supply per evaluation, confined to
// the thread running it. Allocation order is deterministic.
class FreshSupply {
 public:
  explicit FreshSupply(std::string prefix = std::string(kFreshPrefix),
                       std::uint64_t start = 0)
      : prefix_(std::move(prefix)), counter_(start) {}

  Term nextBlank() { return Term::blank(nextLabel()); }
  Term nextVariable() { return Term::variable(nextLabel()); }
  // A fresh term of the same kind as `like` (blank or variable).
  Term nextLike(const Term& like);

  std::uint64_t issued() const noexcept { return counter_; }

 private:
  std::string nextLabel() { return prefix_ + std::to_string(++counter_); }

  std::string prefix_;
  std::uint64_t counter_;
};

}  // namespace poim
