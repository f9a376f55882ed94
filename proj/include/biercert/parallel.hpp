#pragma once

#include <cstdint>
#include <functional>

namespace bier {

/// Worker count: `requested` when positive, else the BIERCERT_THREADS
/// environment variable, else hardware concurrency (at least 1).
int resolve_thread_count(int requested);

/// Runs fn(chunk, begin, end) over a fixed contiguous partition of
/// [0, total) and joins. Chunk boundaries depend only on total and the
/// thread count, so callers can merge per-chunk results deterministically.
void parallel_chunks(std::uint64_t total, int threads,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn);

}  // namespace bier
