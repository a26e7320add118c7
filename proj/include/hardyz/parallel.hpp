#ifndef HARDYZ_PARALLEL_HPP
#define HARDYZ_PARALLEL_HPP

#include <algorithm>
#include <functional>
#include <future>
#include <thread>
#include <vector>

namespace hardyz {

// Process-wide worker cap (0 = hardware concurrency). Set once by the CLI.
void set_max_threads(unsigned n);
unsigned max_threads();

// Splits [0, n) into contiguous chunks, runs `fn(begin, end, chunk)` on a
// small async pool, and returns when all chunks are done. Chunk indices are
// deterministic, so callers can merge per-chunk results in order.
template <typename Fn>
void parallel_chunks(std::size_t n, Fn&& fn) {
  if (n == 0) return;
  unsigned workers = std::max(1u, std::min<unsigned>(max_threads(), unsigned(n)));
  if (workers == 1) {
    fn(std::size_t{0}, n, std::size_t{0});
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::future<void>> futs;
  std::size_t idx = 0;
  for (std::size_t b = 0; b < n; b += chunk, ++idx) {
    std::size_t e = std::min(n, b + chunk);
    futs.push_back(std::async(std::launch::async, [&fn, b, e, idx] { fn(b, e, idx); }));
  }
  for (auto& f : futs) f.get();
}

}  // namespace hardyz

#endif  // HARDYZ_PARALLEL_HPP
