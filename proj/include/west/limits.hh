#pragma once

#include <chrono>
#include <cstddef>
#include <limits>
#include <optional>

namespace west {

/* Resource limits for long-running transformations.
 *
 * Limits are installed per thread with a LimitScope and polled from the hot
 * loops of the regex operators, so the pure function signatures stay free of
 * bookkeeping. A poll that finds the deadline passed throws TimeoutError; an
 * operator producing more than max_alternatives alternatives throws
 * BudgetExceeded.
 */
struct Limits {
  using Clock = std::chrono::steady_clock;

  std::optional<Clock::time_point> deadline;
  std::size_t max_alternatives = std::numeric_limits<std::size_t>::max();

  static Limits with_timeout(std::chrono::nanoseconds budget) {
    Limits l;
    l.deadline = Clock::now() + budget;
    return l;
  }
};

/* Limits in force on the calling thread (unlimited when no scope is active). */
const Limits &current_limits();

/* Throws TimeoutError if the current deadline has passed. */
void poll_deadline();

/* Throws BudgetExceeded if count exceeds the current alternative cap. */
void check_alternatives(std::size_t count);

class LimitScope {
public:
  explicit LimitScope(const Limits &limits);
  ~LimitScope();

  LimitScope(const LimitScope &) = delete;
  LimitScope &operator=(const LimitScope &) = delete;

private:
  Limits saved_;
};

} // namespace west
