#pragma once

// Shared fixtures for the unit tests.

#include <cstdint>
#include <utility>
#include <vector>

#include "ctrlhub/generators.hpp"
#include "ctrlhub/graph.hpp"

namespace testutil {

inline ctrlhub::DirectedGraph graph_of(int n, std::vector<std::pair<int, int>> edges) {
  return ctrlhub::DirectedGraph::from_edges(n, std::move(edges));
}

// chain 0->1->2
inline ctrlhub::DirectedGraph chain3() { return graph_of(3, {{0, 1}, {1, 2}}); }
// star 0->1, 0->2
inline ctrlhub::DirectedGraph star3() { return graph_of(3, {{0, 1}, {0, 2}}); }
// diamond 0->1, 0->2, 1->3, 2->3
inline ctrlhub::DirectedGraph diamond() {
  return graph_of(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}
// cycle 0->1->2->0
inline ctrlhub::DirectedGraph cycle3() { return graph_of(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Every digraph on n nodes: all subsets of the n*n arcs, self-loops included.
template <typename Fn>
void for_each_digraph(int n, Fn&& fn) {
  const int cells = n * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < cells; ++c) {
      if (mask >> c & 1) edges.emplace_back(c / n, c % n);
    }
    fn(ctrlhub::DirectedGraph::from_edges(n, std::move(edges), nullptr, true));
  }
}

// Stream of seeded random digraphs across a size and density range.
struct RandomGraphs {
  ctrlhub::SplitMix64 rng;

  explicit RandomGraphs(std::uint64_t seed) : rng(seed) {}

  ctrlhub::DirectedGraph next(int n_min, int n_max, double max_density = 1.0) {
    const int n = n_min + static_cast<int>(rng.bounded(n_max - n_min + 1));
    // self-loops in a quarter of the draws; forced at n=1 where no other arc exists
    const bool loops = rng.bounded(4) == 0 || n == 1;
    const std::int64_t cap = static_cast<std::int64_t>(n) * (loops ? n : n - 1);
    std::int64_t l_max = static_cast<std::int64_t>(cap * max_density);
    if (l_max < 1) l_max = 1;
    if (l_max > cap) l_max = cap;
    const std::int64_t l = 1 + static_cast<std::int64_t>(rng.bounded(l_max));
    return ctrlhub::erdos_renyi_directed(n, l, rng.next(), loops);
  }
};

}  // namespace testutil
