#pragma once

// Per-thread wall-clock deadline checked inside the long-running loops.

#include <chrono>
#include <optional>

#include "wfomc/error.hpp"

namespace wfomc {

using Clock = std::chrono::steady_clock;

namespace detail {
inline thread_local std::optional<Clock::time_point> deadline;
}

/// Sets (or clears) the deadline of the calling thread.
inline void set_deadline(std::optional<Clock::time_point> when) { detail::deadline = when; }

/// Throws BudgetExceeded once the calling thread's deadline has passed.
inline void check_deadline() {
  if (detail::deadline && Clock::now() > *detail::deadline) throw BudgetExceeded("time budget exceeded");
}

/// Restores the previous deadline on scope exit.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::optional<Clock::time_point> when) : saved_(detail::deadline) { set_deadline(when); }
  ~DeadlineScope() { set_deadline(saved_); }
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<Clock::time_point> saved_;
};

}  // namespace wfomc
