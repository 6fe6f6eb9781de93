#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace west {

/* Evaluates fn(0) .. fn(count - 1) on up to `threads` threads and returns
 * the results in index order. The first exception thrown by any task is
 * rethrown after all workers have stopped. */
template <class Fn>
auto parallel_map(std::size_t count, unsigned threads, Fn &&fn)
    -> std::vector<std::invoke_result_t<Fn &, std::size_t>> {
  using R = std::invoke_result_t<Fn &, std::size_t>;
  std::vector<std::optional<R>> slots(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) {
        return;
      }
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        failed.store(true);
      }
    }
  };

  const std::size_t extra =
      threads > 1 ? std::min<std::size_t>(threads - 1, count) : 0;
  std::vector<std::thread> pool;
  pool.reserve(extra);
  for (std::size_t t = 0; t < extra; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto &th : pool) {
    th.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }

  std::vector<R> out;
  out.reserve(count);
  for (auto &slot : slots) {
    out.push_back(std::move(*slot));
  }
  return out;
}

} // namespace west
