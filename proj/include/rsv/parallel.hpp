#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rsv {

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index runs
/// exactly once; callers write results into slot i so the outcome does not
/// depend on the schedule. The first exception thrown is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto n = static_cast<std::size_t>(workers) < count ? static_cast<std::size_t>(workers) : count;
  for (std::size_t w = 0; w < n; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Maps f over items in parallel, preserving order.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, int workers, F&& f) {
  using R = decltype(f(items.front()));
  std::vector<R> out(items.size());
  parallel_for(items.size(), workers, [&](std::size_t i) { out[i] = f(items[i]); });
  return out;
}

}  // namespace rsv
