#pragma once

#include <cstdint>
#include <utility>

namespace sectorlen {

/// Resolves a worker count: `requested` if positive, otherwise the
/// SECTORLEN_THREADS environment variable, otherwise the available
/// hardware parallelism. Always at least 1.
int worker_count(int requested = 0);

/// Contiguous block [begin, end) assigned to `worker` when splitting
/// `total` items across `workers` blocks.
inline std::pair<std::uint64_t, std::uint64_t> block_range(std::uint64_t total,
                                                           int workers,
                                                           int worker) {
  const std::uint64_t base = total / workers;
  const std::uint64_t rem = total % workers;
  const std::uint64_t w = static_cast<std::uint64_t>(worker);
  const std::uint64_t begin = w * base + (w < rem ? w : rem);
  const std::uint64_t len = base + (w < rem ? 1 : 0);
  return {begin, begin + len};
}

}  // namespace sectorlen
