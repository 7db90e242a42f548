#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace medcurv {

/// Resolves a requested worker count; 0 means hardware concurrency.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(chunk, begin, end) over `chunks` contiguous slices of [0, n).
/// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_chunks(std::size_t n, unsigned chunks, Fn&& fn) {
  chunks = static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(chunks, n)));
  if (chunks <= 1) {
    fn(0u, std::size_t{0}, n);
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  const std::size_t step = (n + chunks - 1) / chunks;
  for (unsigned c = 0; c < chunks; ++c) {
    const std::size_t begin = std::min(n, c * step);
    const std::size_t end = std::min(n, begin + step);
    workers.emplace_back([&, c, begin, end] {
      try {
        fn(c, begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace medcurv
