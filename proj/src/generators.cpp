#include "ctrlhub/generators.hpp"

#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ctrlhub/errors.hpp"

namespace ctrlhub {

namespace {

std::int64_t max_edges(int n, bool allow_self_loops) {
  return static_cast<std::int64_t>(n) * (allow_self_loops ? n : n - 1);
}

void check_parameters(int n, std::int64_t l, bool allow_self_loops) {
  if (n < 1) throw parameter_error("node count must be at least 1, got " + std::to_string(n));
  if (l < 1) throw parameter_error("edge count must be at least 1, got " + std::to_string(l));
  std::int64_t cap = max_edges(n, allow_self_loops);
  if (l > cap) {
    throw parameter_error("edge count " + std::to_string(l) + " exceeds the " +
                          std::to_string(cap) + " distinct pairs available");
  }
}

// Pair codes enumerate ordered pairs lexicographically; without self-loops the
// diagonal is skipped by shifting the column past it.
std::pair<int, int> decode_pair(std::int64_t code, int n, bool allow_self_loops) {
  if (allow_self_loops) {
    return {static_cast<int>(code / n), static_cast<int>(code % n)};
  }
  int u = static_cast<int>(code / (n - 1));
  int r = static_cast<int>(code % (n - 1));
  return {u, r + (r >= u ? 1 : 0)};
}

}  // namespace

DirectedGraph erdos_renyi_directed(int n, std::int64_t l, std::uint64_t seed,
                                   bool allow_self_loops) {
  check_parameters(n, l, allow_self_loops);
  const std::uint64_t universe = static_cast<std::uint64_t>(max_edges(n, allow_self_loops));
  SplitMix64 rng(seed);
  std::unordered_set<std::int64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(l) * 2);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(l));
  // Floyd's sampling: j sweeps the top l slots of the code range; each round
  // adds exactly one new code, uniformly over l-subsets.
  for (std::uint64_t j = universe - static_cast<std::uint64_t>(l); j < universe; ++j) {
    std::int64_t t = static_cast<std::int64_t>(rng.bounded(j + 1));
    std::int64_t pick = chosen.count(t) ? static_cast<std::int64_t>(j) : t;
    chosen.insert(pick);
    edges.push_back(decode_pair(pick, n, allow_self_loops));
  }
  return DirectedGraph::from_edges(n, std::move(edges), nullptr, /*edges_are_unique=*/true);
}

DirectedGraph scale_free_directed(int n, std::int64_t l, std::uint64_t seed,
                                  bool allow_self_loops) {
  check_parameters(n, l, allow_self_loops);
  SplitMix64 rng(seed);
  std::vector<int> sources, targets;
  sources.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(l));
  targets.reserve(static_cast<std::size_t>(n) + static_cast<std::size_t>(l));
  for (int v = 0; v < n; ++v) {
    sources.push_back(v);
    targets.push_back(v);
  }
  std::unordered_set<std::int64_t> seen;
  seen.reserve(static_cast<std::size_t>(l) * 2);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(l));
  auto accept = [&](int u, int v) {
    seen.insert(static_cast<std::int64_t>(u) * n + v);
    edges.emplace_back(u, v);
    sources.push_back(u);
    targets.push_back(v);
  };
  int rejections = 0;
  while (static_cast<std::int64_t>(edges.size()) < l) {
    int u = sources[rng.bounded(sources.size())];
    int v = targets[rng.bounded(targets.size())];
    bool bad = (!allow_self_loops && u == v) ||
               seen.count(static_cast<std::int64_t>(u) * n + v) != 0;
    if (!bad) {
      accept(u, v);
      rejections = 0;
      continue;
    }
    if (++rejections < 256) continue;
    // Dense tail: attachment sampling keeps hitting existing pairs. Take the
    // first absent pair instead so saturated requests still terminate.
    for (int a = 0; a < n; ++a) {
      bool placed = false;
      for (int b = 0; b < n; ++b) {
        if (!allow_self_loops && a == b) continue;
        if (seen.count(static_cast<std::int64_t>(a) * n + b)) continue;
        accept(a, b);
        placed = true;
        break;
      }
      if (placed) break;
    }
    rejections = 0;
  }
  return DirectedGraph::from_edges(n, std::move(edges), nullptr, /*edges_are_unique=*/true);
}

}  // namespace ctrlhub
