#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace npick {

// Data-parallel loop over [0, n). The body must write only to slots owned by
// its index; chunking is contiguous so results are deterministic.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (n < 512 || workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace npick
