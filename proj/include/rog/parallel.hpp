#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace rog {

// Runs fn(chunk) for chunk = 0..chunk_count-1 on `workers` threads. The
// chunk decomposition must not depend on the worker count and each chunk
// must write only its own slot, so that results merge identically for any
// degree of parallelism.
inline void run_chunks(std::uint64_t chunk_count, int workers,
                       const std::function<void(std::uint64_t)>& fn) {
  if (workers < 1) workers = 1;
  if (workers == 1 || chunk_count <= 1) {
    for (std::uint64_t c = 0; c < chunk_count; ++c) fn(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  const int count = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), chunk_count));
  for (int w = 0; w < count; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        if (c >= chunk_count) return;
        try {
          fn(c);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace rog
