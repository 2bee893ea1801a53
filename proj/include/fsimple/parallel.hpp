#pragma once

// Static-chunk parallel loop. Work item i always lands in the same chunk for a
// given (n, workers) pair and callers merge per-chunk results in chunk order,
// so output never depends on thread scheduling.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fsimple {

// Calls body(chunk, begin, end) for `workers` contiguous ranges covering [0, n).
template <class Body>
void parallel_chunks(std::size_t n, int workers, Body&& body) {
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  const std::size_t chunks = std::min(w, std::max<std::size_t>(n, 1));
  if (chunks <= 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
    pool.emplace_back([&, c, lo, hi] {
      try {
        body(c, lo, hi);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Number of chunks parallel_chunks will use.
inline std::size_t chunk_count(std::size_t n, int workers) {
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  return std::max<std::size_t>(1, std::min(w, std::max<std::size_t>(n, 1)));
}

}  // namespace fsimple
