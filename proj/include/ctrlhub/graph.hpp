#pragma once

// Directed-graph data model: dense-indexed nodes, CSR adjacency, an external
// label table, edge-list parsing/serialization, transpose, and the bipartite
// split (one out-copy and one in-copy per node) that the matching code runs on.
//
// All types are immutable after construction and safe to share across threads.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ctrlhub {

// Compressed sparse rows. Row targets are sorted ascending and duplicate-free.
struct Csr {
  std::vector<std::int64_t> offsets;  // size rows+1
  std::vector<int> targets;

  int rows() const { return static_cast<int>(offsets.empty() ? 0 : offsets.size() - 1); }
  std::span<const int> row(int r) const {
    return {targets.data() + offsets[r], targets.data() + offsets[r + 1]};
  }
};

// Bijection between dense node indices and external string labels.
// The identity table maps index i to the decimal string "i" without storing it.
class Labels {
 public:
  static std::shared_ptr<const Labels> identity(int n);
  // Throws contract_error if two names collide.
  static std::shared_ptr<const Labels> from_names(std::vector<std::string> names);

  int size() const { return n_; }
  std::string name_of(int index) const;
  // Returns -1 when the label is not present.
  int index_of(std::string_view name) const;

 private:
  Labels() = default;
  bool identity_ = true;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<int> order_;  // indices sorted by name, for lookup in the explicit case
};

class NodeSet;

// A directed graph over dense node indices 0..n-1.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Canonicalizes the edge list: endpoints validated against [0, n), duplicate
  // edges collapsed to their first occurrence, adjacency rows sorted ascending.
  // Self-loops are kept. Pass labels = nullptr for the identity table.
  static DirectedGraph from_edges(int n, std::vector<std::pair<int, int>> edges,
                                  std::shared_ptr<const Labels> labels = nullptr,
                                  bool edges_are_unique = false);

  int n() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::span<const int> successors(int u) const { return out_.row(u); }
  std::int64_t out_degree(int u) const { return out_.offsets[u + 1] - out_.offsets[u]; }
  const Csr& out_csr() const { return out_; }

  std::string label_of(int index) const { return labels_->name_of(index); }
  int index_of(std::string_view label) const { return labels_->index_of(label); }
  const std::shared_ptr<const Labels>& labels() const { return labels_; }

 private:
  int n_ = 0;
  Csr out_;
  std::vector<std::pair<int, int>> edges_;
  std::shared_ptr<const Labels> labels_;
};

// Bipartite split of a directed graph: edge u->v becomes (u_out, v_in).
// Left rows are out-adjacency, right rows are in-adjacency; both sides have
// one copy per source node.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int n, Csr left_adj, Csr right_adj, std::int64_t edge_count)
      : n_(n), left_(std::move(left_adj)), right_(std::move(right_adj)), edge_count_(edge_count) {}

  int n() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  std::span<const int> left_row(int u) const { return left_.row(u); }
  std::span<const int> right_row(int v) const { return right_.row(v); }
  const Csr& left_csr() const { return left_; }
  bool has_edge(int u_out, int v_in) const;
  // Materializes the edge list sorted by (left, right).
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  Csr left_;
  Csr right_;
  std::int64_t edge_count_ = 0;
};

// Node subset with O(1) membership and iteration in ascending index order.
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(int universe) : flags_(universe, 0) {}
  static NodeSet of(int universe, std::initializer_list<int> members);
  static NodeSet of(int universe, const std::vector<int>& members);
  // Takes ownership of a 0/1 flag vector.
  static NodeSet from_flags(std::vector<char> flags);

  bool contains(int v) const { return flags_[v] != 0; }
  void insert(int v);
  int size() const { return count_; }
  int universe_size() const { return static_cast<int>(flags_.size()); }
  bool empty() const { return count_ == 0; }
  std::vector<int> indices() const;

  friend bool operator==(const NodeSet& a, const NodeSet& b) {
    return a.flags_ == b.flags_;
  }

 private:
  std::vector<char> flags_;
  int count_ = 0;
};

NodeSet set_union(const NodeSet& a, const NodeSet& b);
NodeSet set_intersection(const NodeSet& a, const NodeSet& b);
NodeSet set_complement(const NodeSet& a);

// Reads whitespace-separated "source target" label pairs, one edge per line.
// Blank lines and lines whose first non-blank character is '#' are skipped;
// CRLF line endings are accepted. Node indices follow first appearance,
// duplicate edges collapse to one, self-loops are kept.
// Throws parse_error on a malformed line and empty_graph_error when the input
// contains no edges at all.
DirectedGraph parse_edge_list(std::istream& in);
DirectedGraph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list for graphs that came from it: one "src dst" line
// per edge, in the graph's edge order.
std::string to_edge_list(const DirectedGraph& g);

// Same nodes and labels, every edge reversed. An involution.
DirectedGraph transpose(const DirectedGraph& g);

BipartiteGraph to_bipartite(const DirectedGraph& g);

// Structural equality: same node count, same labels, same edge set.
bool graphs_equal(const DirectedGraph& a, const DirectedGraph& b);

}  // namespace ctrlhub
