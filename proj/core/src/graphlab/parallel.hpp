#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ramcut::graphlab::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(begin, end) on contiguous blocks of [0, n). Small ranges run inline.
template <typename Body>
void parallel_blocks(std::size_t n, unsigned threads, Body&& body) {
  constexpr std::size_t kMinBlock = 4096;
  const std::size_t workers = std::min<std::size_t>(threads, (n + kMinBlock - 1) / kMinBlock);
  if (workers <= 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  body(std::size_t{0}, std::min(n, chunk));
  for (auto& t : pool) t.join();
}

}  // namespace ramcut::graphlab::detail
