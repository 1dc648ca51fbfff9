#pragma once

#include <cstddef>
#include <functional>

namespace d2d {

/// Number of workers actually used for a request of n_threads
/// (0 = hardware concurrency, honoring the D2D_THREADS environment variable).
int resolve_threads(int n_threads);

/// Runs fn(begin, end) over a partition of [0, n) on a transient worker pool.
/// Chunk boundaries are fixed by `grain`, never by the worker count, so
/// callers that write results indexed by chunk or by element get identical
/// output for every thread count.
void parallel_chunks(size_t n, size_t grain, int n_threads,
                     const std::function<void(size_t, size_t)>& fn);

}  // namespace d2d
