#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace diagramalg {

namespace detail {
inline std::atomic<unsigned>& thread_limit() {
  static std::atomic<unsigned> limit{std::max(1u, std::thread::hardware_concurrency())};
  return limit;
}
}  // namespace detail

/// Caps the worker count used by every parallel loop in the library.
inline void set_thread_count(unsigned threads) {
  detail::thread_limit() = std::max(1u, threads);
}

inline unsigned thread_count() { return detail::thread_limit(); }

/// Runs body(i) for i in [begin, end) over contiguous chunks.  The body must
/// only touch disjoint state per index.
template <class Body>
void parallel_for(std::size_t begin, std::size_t end, Body&& body) {
  if (end <= begin) return;
  const std::size_t total = end - begin;
  const std::size_t workers = std::min<std::size_t>(thread_count(), total);
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace diagramalg
