#include "d2d/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace d2d {

int resolve_threads(int n_threads) {
  if (n_threads > 0) return n_threads;
  if (const char* env = std::getenv("D2D_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(size_t n, size_t grain, int n_threads,
                     const std::function<void(size_t, size_t)>& fn) {
  if (n == 0) return;
  if (grain == 0) grain = 1;
  const int workers = resolve_threads(n_threads);
  const size_t n_chunks = (n + grain - 1) / grain;
  if (workers <= 1 || n_chunks <= 1) {
    for (size_t c = 0; c < n_chunks; ++c) {
      const size_t begin = c * grain;
      fn(begin, std::min(begin + grain, n));
    }
    return;
  }

  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      const size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      const size_t begin = c * grain;
      fn(begin, std::min(begin + grain, n));
    }
  };
  std::vector<std::thread> pool;
  const size_t spawn = std::min<size_t>(workers, n_chunks);
  pool.reserve(spawn);
  for (size_t i = 0; i < spawn; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

}  // namespace d2d
