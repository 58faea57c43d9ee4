#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace diracwig::detail {

/// Runs body(i) for i in [0, count) on a strided worker pool. threads <= 0 uses
/// the hardware concurrency. The first exception thrown by any worker is
/// rethrown on the calling thread after every worker has joined.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : std::thread::hardware_concurrency();
  workers = std::max(1u, static_cast<unsigned>(std::min<std::size_t>(workers, count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < workers; ++id) {
    pool.emplace_back([&, id] {
      try {
        for (std::size_t i = id; i < count; i += workers) body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(guard);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace diracwig::detail
