#pragma once

// Control-scheme extraction: decompose a maximum matching into control paths
// and cycles and classify every node's role in the scheme.

#include <cstdint>
#include <string_view>
#include <vector>

#include "ctrlhub/graph.hpp"
#include "ctrlhub/matching.hpp"

namespace ctrlhub {

enum class Role : std::uint8_t {
  head,
  middle,
  tail,
  isolated_driver,  // a length-1 path: head and tail at once
  cycle_member,
};

std::string_view to_string(Role r);

// Node-disjoint decomposition induced by a maximum matching: every node lies
// on exactly one path or cycle. Paths are sorted by head index; cycles are
// rotated to start at their lowest node and sorted by that node.
struct ControlScheme {
  int n = 0;
  std::vector<std::vector<int>> paths;   // head first, tail last
  std::vector<std::vector<int>> cycles;  // a self-loop is a length-1 cycle
  std::vector<Role> role_of;             // indexed by node
};

// Follows matched successor links from every node whose in-copy is unmatched,
// then collects the remaining matched nodes into cycles.
// Throws contract_error when m is not a maximum matching of to_bipartite(g).
ControlScheme extract_scheme(const DirectedGraph& g, const Matching& m);

// True iff the normalized path/cycle decompositions differ.
// Throws contract_error when the schemes are over different node universes.
bool schemes_differ(const ControlScheme& a, const ControlScheme& b);

namespace detail {

// Allocation-free scheme walk used by extract_scheme and the brute-force
// oracle. Outputs roles and reconciliation counters; optionally materializes
// the path/cycle sequences.
struct SchemeWalk {
  std::vector<Role> role;
  int path_count = 0;
  int cycle_count = 0;
  std::int64_t path_edge_sum = 0;
  std::int64_t cycle_edge_sum = 0;

  void run(int n, const std::vector<int>& match_of_left, const std::vector<int>& match_of_right,
           std::vector<std::vector<int>>* paths_out = nullptr,
           std::vector<std::vector<int>>* cycles_out = nullptr);

 private:
  std::vector<int> seq_;       // scratch: the sequence being walked
  std::vector<char> covered_;  // scratch: nodes already placed on a path or cycle
};

}  // namespace detail

}  // namespace ctrlhub
