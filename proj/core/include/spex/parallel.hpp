#pragma once

// Minimal worker-pool helpers.  Thread count comes from the SPEX_THREADS
// environment variable and defaults to 1 (fully sequential, deterministic).

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spex {

inline int thread_count() {
  const char* env = std::getenv("SPEX_THREADS");
  if (env == nullptr) return 1;
  const int v = std::atoi(env);
  if (v < 1) return 1;
  if (v > 256) return 256;
  return v;
}

// Runs fn(i) for i in [0, count) across `threads` workers.  Iteration order
// within a worker is ascending; callers that need deterministic output must
// write results into per-index slots.
template <typename F>
void parallel_for_index(std::size_t count, int threads, F&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int spawn = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  pool.reserve(static_cast<std::size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace spex
