#pragma once

// Seeded random graph generators. All randomness comes from a fixed splitmix64
// stream with rejection-sampled bounded draws, so identical parameters produce
// bit-identical graphs on every platform.

#include <cstdint>

#include "ctrlhub/graph.hpp"

namespace ctrlhub {

struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound) via rejection of the biased remainder range.
  std::uint64_t bounded(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

// Exactly l distinct directed edges sampled uniformly without replacement
// (Floyd's subset sampling over the pair codes). Self-loops are excluded
// unless allowed. Throws parameter_error when n < 1 or l is out of range.
DirectedGraph erdos_renyi_directed(int n, std::int64_t l, std::uint64_t seed,
                                   bool allow_self_loops = false);

// Preferential-attachment endpoint sampling: sources and targets are drawn
// from pools seeded with every node once and grown by one entry per accepted
// edge endpoint, so high-degree nodes attract more edges. Duplicate draws are
// rejected; after 256 consecutive rejections the generator falls back to the
// first absent pair in lexicographic order, which keeps saturated instances
// terminating. Same parameter contract as erdos_renyi_directed.
DirectedGraph scale_free_directed(int n, std::int64_t l, std::uint64_t seed,
                                  bool allow_self_loops = false);

}  // namespace ctrlhub
