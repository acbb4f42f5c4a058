// Minimal deterministic work partitioning.  Shards are fixed by (total,
// threads); callers merge shard results in shard order so output never
// depends on scheduling.
#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace n3l {

/// Thread count resolution: explicit request > N3L_THREADS > 1.
inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("N3L_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

/// Runs fn(shard, begin, end) on `threads` contiguous index shards of
/// [0, total).  fn must only write shard-local state indexed by `shard`.
template <typename Fn>
void parallel_shards(std::size_t total, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  std::size_t nshards = std::min<std::size_t>(threads, std::max<std::size_t>(total, 1));
  if (nshards <= 1) {
    fn(std::size_t{0}, std::size_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nshards);
  std::size_t chunk = (total + nshards - 1) / nshards;
  for (std::size_t s = 0; s < nshards; ++s) {
    std::size_t begin = s * chunk;
    std::size_t end = std::min(total, begin + chunk);
    pool.emplace_back([&fn, s, begin, end] { fn(s, begin, end); });
  }
  for (auto& t : pool) t.join();
}

inline std::size_t shard_count(std::size_t total, int threads) {
  return std::min<std::size_t>(std::max(1, threads), std::max<std::size_t>(total, 1));
}

}  // namespace n3l
