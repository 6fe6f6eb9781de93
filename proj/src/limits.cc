#include "west/limits.hh"

#include "west/error.hh"

#include <string>

namespace west {

namespace {
thread_local Limits tls_limits;
} // namespace

const Limits &current_limits() { return tls_limits; }

void poll_deadline() {
  const auto &deadline = tls_limits.deadline;
  if (deadline && Limits::Clock::now() > *deadline) {
    throw TimeoutError("time budget exhausted");
  }
}

void check_alternatives(std::size_t count) {
  if (count > tls_limits.max_alternatives) {
    throw BudgetExceeded("regex grew to " + std::to_string(count) +
                         " alternatives (cap " +
                         std::to_string(tls_limits.max_alternatives) + ")");
  }
}

LimitScope::LimitScope(const Limits &limits) : saved_(tls_limits) {
  tls_limits = limits;
}

LimitScope::~LimitScope() { tls_limits = saved_; }

} // namespace west
