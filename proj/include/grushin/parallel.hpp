#pragma once

// Deterministic data parallelism: work is split into a fixed number of
// chunks independent of the thread count, so reductions done in chunk
// order give identical results on any machine.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace grushin {

inline unsigned thread_count() {
  if (const char* env = std::getenv("GRUSHIN_THREADS")) {
    const long n = std::atol(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs fn(chunk) for chunk = 0..chunks-1 on up to thread_count() threads.
inline void parallel_chunks(std::size_t chunks,
                            const std::function<void(std::size_t)>& fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t c = next.fetch_add(1);
        if (c >= chunks) return;
        fn(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace grushin
