#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The unbounded product and the Depth searches sit in the bar-recursion
// complexity class; termination is not syntactically guaranteed for
// arbitrary control functionals. Every recursion step charges a shared
// budget and overruns surface as this error instead of a hang.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct DepthTooLarge : Error {
  using Error::Error;
};

struct CapInsufficient : Error {
  using Error::Error;
};

struct TableTooShort : Error {
  using Error::Error;
};

struct InternalInvariantViolation : Error {
  using Error::Error;
};

class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 100'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_) {
      throw BudgetExceeded("work budget exceeded: " + std::to_string(used_) +
                           " > " + std::to_string(limit_));
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct Counters {
  std::uint64_t eps_calls = 0;
  std::uint64_t depth_evals = 0;
  std::uint64_t prec_memo = 0;
  std::uint64_t budget_used = 0;
};

}  // namespace ramsel
