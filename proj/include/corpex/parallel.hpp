#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace corpex {

/// 0 means "use the hardware".
inline unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

inline std::size_t chunk_count(std::size_t n, unsigned threads) noexcept {
  return std::max<std::size_t>(
      1, std::min<std::size_t>(resolve_threads(threads), n));
}

/// Splits [0, n) into at most `threads` contiguous chunks and runs
/// `fn(chunk, begin, end)` on each. Chunk boundaries depend only on `n` and
/// the chunk count, so callers that reduce per-chunk results in chunk order
/// get output independent of scheduling. The first exception thrown by any
/// chunk is rethrown after all workers join.
template <class Fn>
std::size_t parallel_chunks(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t chunks = chunk_count(n, threads);
  const auto bound = [&](std::size_t c) { return n * c / chunks; };
  if (chunks == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          fn(c, bound(c), bound(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return chunks;
}

}  // namespace corpex
