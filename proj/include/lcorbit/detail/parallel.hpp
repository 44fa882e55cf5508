#pragma once

// Minimal chunked parallel-for.  Work is split into contiguous chunks pulled
// from an atomic counter; callers merge per-thread results themselves so that
// final output stays deterministic regardless of thread count.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace lcorbit::detail {

inline unsigned default_thread_count() {
  if (const char* env = std::getenv("LCORBIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// fn(begin, end, thread_index) is called on disjoint ranges covering
// [0, total).  thread_index < threads.
template <typename Fn>
void parallel_chunks(std::size_t total, unsigned threads, std::size_t chunk, Fn&& fn) {
  if (threads == 0) threads = default_thread_count();
  if (total == 0) return;
  if (threads <= 1 || total <= chunk) {
    fn(std::size_t{0}, total, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (;;) {
        std::size_t lo = next.fetch_add(chunk);
        if (lo >= total) break;
        std::size_t hi = lo + chunk < total ? lo + chunk : total;
        fn(lo, hi, t);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace lcorbit::detail
