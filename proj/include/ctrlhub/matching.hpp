#pragma once

// Maximum bipartite matching (Hopcroft-Karp) and alternating-path
// reachability. The default entry points use OpenMP-parallel BFS kernels on
// large graphs; the ctrlhub::serial namespace holds the serial reference
// implementations that the tests and the benchmark compare against. Both
// produce bit-identical results: the BFS layering computes exact distance
// levels whatever the traversal order, and the augmenting pass is serial with
// a fixed scan order.

#include <utility>
#include <vector>

#include "ctrlhub/graph.hpp"

namespace ctrlhub {

// A matching of a bipartite graph: a pairing of left and right nodes with no
// node in two pairs. Unmatched is encoded as -1.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : left_(n, -1), right_(n, -1) {}

  // Validates mutual consistency of the two partner arrays.
  static Matching from_partner_arrays(std::vector<int> match_of_left,
                                      std::vector<int> match_of_right);
  // Additionally validates that every pair is an edge of b.
  static Matching from_pairs(const BipartiteGraph& b,
                             const std::vector<std::pair<int, int>>& pairs);

  int n() const { return static_cast<int>(left_.size()); }
  int size() const { return size_; }
  int match_of_left(int u) const { return left_[u]; }
  int match_of_right(int v) const { return right_[v]; }
  bool left_matched(int u) const { return left_[u] >= 0; }
  bool right_matched(int v) const { return right_[v] >= 0; }
  const std::vector<int>& left_partners() const { return left_; }
  const std::vector<int>& right_partners() const { return right_; }
  // Pairs (left, right) sorted by left index.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.left_ == b.left_;
  }

 private:
  std::vector<int> left_;
  std::vector<int> right_;
  int size_ = 0;
};

// Right-side nodes reachable from some unmatched right node by an alternating
// path of even length (zero included), plus the left nodes on those paths.
struct AlternatingReachability {
  NodeSet reachable_right;
  NodeSet reachable_left;
};

// Deterministic maximum matching: adjacency scanned in ascending index order,
// so a fixed graph always yields the same matching.
Matching maximum_matching(const BipartiteGraph& b);

// Berge certificate: true iff no augmenting path exists for m.
// Throws contract_error if m is not a valid matching of b.
bool is_maximum(const BipartiteGraph& b, const Matching& m);

// BFS layering from the unmatched right nodes: non-matching edges to the left
// side, then the single matching edge back to the right side. Expects m to be
// maximum (checked in assert-enabled builds).
AlternatingReachability even_alternating_reachability(const BipartiteGraph& b, const Matching& m);

namespace serial {
Matching maximum_matching(const BipartiteGraph& b);
AlternatingReachability even_alternating_reachability(const BipartiteGraph& b, const Matching& m);
}  // namespace serial

}  // namespace ctrlhub
