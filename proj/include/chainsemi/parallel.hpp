#ifndef CHAINSEMI_PARALLEL_HPP_
#define CHAINSEMI_PARALLEL_HPP_

#include <cstddef>
#include <thread>
#include <vector>

namespace chainsemi {

inline unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

//! Runs fn(begin, end) over disjoint chunks of [0, count). Workers write
//! only to index-addressed slots, so results are deterministic regardless
//! of the thread count.
template <typename Fn>
void parallel_chunks(std::size_t count, int threads, Fn&& fn) {
  const unsigned workers =
      std::min<std::size_t>(resolve_threads(threads), count == 0 ? 1 : count);
  if (workers <= 1 || count < 2048) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] { fn(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace chainsemi

#endif  // CHAINSEMI_PARALLEL_HPP_
