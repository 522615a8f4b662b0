#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace sepr {

/// 0 means one worker per hardware thread.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, count) into contiguous chunks and runs fn(begin, end, worker)
/// on each. Worker w always receives the w-th chunk, so per-worker results
/// can be merged in a fixed order. The first exception thrown by any worker
/// is rethrown on the calling thread.
template <typename Fn>
void parallel_chunks(std::uint64_t count, int threads, Fn&& fn) {
  const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(threads)),
                                                               std::max<std::uint64_t>(count, 1)));
  if (workers <= 1) {
    fn(std::uint64_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex mu;
  const std::uint64_t chunk = count / static_cast<std::uint64_t>(workers);
  const std::uint64_t extra = count % static_cast<std::uint64_t>(workers);
  std::uint64_t begin = 0;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t len = chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    const std::uint64_t end = begin + len;
    pool.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Number of workers parallel_chunks will use for `count` items.
inline int chunk_workers(std::uint64_t count, int threads) {
  return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(threads)),
                                                  std::max<std::uint64_t>(count, 1)));
}

}  // namespace sepr
