#pragma once

// Brute-force ground truth for small graphs: enumerate every maximum matching,
// walk the control scheme of each, and derive head/tail/hub sets straight from
// the definitions. The number of maximum matchings can grow factorially, so
// every entry point takes a limit and reports truncation instead of running
// away.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ctrlhub/graph.hpp"
#include "ctrlhub/matching.hpp"

namespace ctrlhub {

// Hard cap for the exponential-table enumerator.
inline constexpr int oracle_max_nodes = 16;

struct OracleReport {
  // Exact number of maximum matchings, also when truncated.
  std::uint64_t matching_count = 0;
  // The set fields below are only meaningful when truncated is false.
  NodeSet head_union;
  NodeSet tail_union;
  NodeSet theorem_hubs;       // complement of head_union and tail_union
  NodeSet definitional_hubs;  // middle in every scheme; excludes pure cycle nodes
  bool truncated = false;
};

// Enumerates maximum matchings via dynamic programming over (left index,
// used-right-nodes bitmask). Counting is O(n * 2^n) regardless of how many
// matchings exist, so a truncated query is cheap; enumeration then emits
// matchings in lexicographic order of their sorted pair lists.
// Reusable across graphs to avoid reallocating the tables.
class MaxMatchingEnumerator {
 public:
  // Throws parameter_error when b has more than oracle_max_nodes nodes.
  void prepare(const BipartiteGraph& b);

  int max_size() const { return max_size_; }
  std::uint64_t count() const;

  // Calls fn(match_of_left, match_of_right) once per maximum matching, in
  // canonical order. Returns false (without calling fn) when the count
  // exceeds limit.
  bool enumerate(std::uint64_t limit,
                 const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn);

 private:
  void walk(int i, std::uint32_t used,
            const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn);

  int n_ = 0;
  int max_size_ = 0;
  std::size_t width_ = 0;
  std::vector<std::uint32_t> adj_;
  std::vector<std::int8_t> best_;    // (n+1) x 2^n
  std::vector<std::uint64_t> count_; // achievers of best_
  std::vector<int> ml_;
  std::vector<int> mr_;
};

// All matchings of maximum size, deduplicated, ordered lexicographically by
// sorted pair list. When more than limit exist the list is abandoned and the
// flag is set. Throws parameter_error when limit < 1.
std::pair<std::vector<Matching>, bool> enumerate_maximum_matchings(const BipartiteGraph& b,
                                                                   std::uint64_t limit);

// Per-scheme role census over every maximum matching of g.
// Throws empty_graph_error when g has no nodes.
OracleReport oracle_hubs(const DirectedGraph& g, std::uint64_t limit = 1'000'000);

}  // namespace ctrlhub
