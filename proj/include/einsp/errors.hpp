#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace einsp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact arithmetic
struct DivByZero : Error { using Error::Error; };

// polynomial / context plumbing
struct ContextError : Error { using Error::Error; };
struct EvalError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ZeroPolyError : Error { using Error::Error; };
struct RemainderError : Error { using Error::Error; };
struct UnsupportedDenominator : Error { using Error::Error; };

// real-root work
struct EndpointRoot : Error { using Error::Error; };
struct InvalidInterval : Error { using Error::Error; };

// ideal-theoretic
struct NotZeroDimensional : Error { using Error::Error; };

// input validation
struct SpecError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// resource limits
struct BudgetExceeded : Error { using Error::Error; };

// Wall-clock plus work-count limit shared by the heavy algorithms.  The
// environment variable EINSTEIN_SP_BUDGET_SECONDS, when set, overrides the
// seconds limit of budgets created through from_env_or().
class Budget {
 public:
  Budget() = default;
  Budget(double max_seconds, std::uint64_t max_steps)
      : max_seconds_(max_seconds), max_steps_(max_steps) {
    start_ = Clock::now();
  }

  static Budget unlimited() { return Budget(0.0, 0); }
  static Budget from_env_or(double seconds, std::uint64_t max_steps);

  // Counts one unit of work (S-pair, bisection step, ...) and enforces limits.
  void step(const char* where) {
    ++steps_;
    if (max_steps_ && steps_ > max_steps_)
      throw BudgetExceeded(std::string("step limit exceeded in ") + where);
    if ((steps_ & 0xff) == 0) check_clock(where);
  }

  void check_clock(const char* where) const;

  std::uint64_t steps_used() const { return steps_; }
  double seconds_used() const;

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
  double max_seconds_ = 0.0;       // 0 = no time limit
  std::uint64_t max_steps_ = 0;    // 0 = no step limit
  std::uint64_t steps_ = 0;
};

}  // namespace einsp
