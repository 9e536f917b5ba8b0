#include "ctrlhub/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "ctrlhub/errors.hpp"

namespace ctrlhub {

namespace {

Csr build_csr(int n, const std::vector<std::pair<int, int>>& edges, bool swap_endpoints) {
  Csr csr;
  csr.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : edges) {
    int src = swap_endpoints ? b : a;
    ++csr.offsets[static_cast<std::size_t>(src) + 1];
  }
  std::partial_sum(csr.offsets.begin(), csr.offsets.end(), csr.offsets.begin());
  csr.targets.resize(edges.size());
  std::vector<std::int64_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  for (const auto& [a, b] : edges) {
    int src = swap_endpoints ? b : a;
    int dst = swap_endpoints ? a : b;
    csr.targets[cursor[src]++] = dst;
  }
  for (int u = 0; u < n; ++u) {
    std::sort(csr.targets.begin() + csr.offsets[u], csr.targets.begin() + csr.offsets[u + 1]);
  }
  return csr;
}

// Removes repeated pairs, keeping each pair's first occurrence in place.
void stable_dedup(std::vector<std::pair<int, int>>& edges) {
  const std::size_t m = edges.size();
  if (m < 2) return;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (edges[i] != edges[j]) return edges[i] < edges[j];
    return i < j;
  });
  std::vector<char> drop(m, 0);
  for (std::size_t k = 1; k < m; ++k) {
    if (edges[order[k]] == edges[order[k - 1]]) drop[order[k]] = 1;
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!drop[i]) edges[out++] = edges[i];
  }
  edges.resize(out);
}

bool is_canonical_decimal(std::string_view s) {
  if (s.empty() || s.size() > 10) return false;
  if (s.size() > 1 && s[0] == '0') return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::shared_ptr<const Labels> Labels::identity(int n) {
  auto t = std::shared_ptr<Labels>(new Labels());
  t->identity_ = true;
  t->n_ = n;
  return t;
}

std::shared_ptr<const Labels> Labels::from_names(std::vector<std::string> names) {
  auto t = std::shared_ptr<Labels>(new Labels());
  t->identity_ = false;
  t->n_ = static_cast<int>(names.size());
  t->names_ = std::move(names);
  t->order_.resize(t->names_.size());
  std::iota(t->order_.begin(), t->order_.end(), 0);
  std::sort(t->order_.begin(), t->order_.end(),
            [&](int a, int b) { return t->names_[a] < t->names_[b]; });
  for (std::size_t i = 1; i < t->order_.size(); ++i) {
    if (t->names_[t->order_[i]] == t->names_[t->order_[i - 1]]) {
      throw contract_error("duplicate node label: " + t->names_[t->order_[i]]);
    }
  }
  return t;
}

std::string Labels::name_of(int index) const {
  assert(index >= 0 && index < n_);
  if (identity_) return std::to_string(index);
  return names_[index];
}

int Labels::index_of(std::string_view name) const {
  if (identity_) {
    if (!is_canonical_decimal(name)) return -1;
    std::int64_t value = 0;
    std::from_chars(name.data(), name.data() + name.size(), value);
    return value < n_ ? static_cast<int>(value) : -1;
  }
  auto it = std::lower_bound(order_.begin(), order_.end(), name,
                             [&](int i, std::string_view s) { return names_[i] < s; });
  if (it != order_.end() && names_[*it] == name) return *it;
  return -1;
}

DirectedGraph DirectedGraph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                                        std::shared_ptr<const Labels> labels,
                                        bool edges_are_unique) {
  if (n < 0) throw contract_error("node count must be non-negative");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw contract_error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                           std::to_string(v) + ") with n=" + std::to_string(n));
    }
  }
  if (!edges_are_unique) stable_dedup(edges);
  DirectedGraph g;
  g.n_ = n;
  g.out_ = build_csr(n, edges, /*swap_endpoints=*/false);
  g.edges_ = std::move(edges);
  g.labels_ = labels ? std::move(labels) : Labels::identity(n);
  if (g.labels_->size() != n) throw contract_error("label table size does not match node count");
  return g;
}

NodeSet NodeSet::of(int universe, std::initializer_list<int> members) {
  NodeSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

NodeSet NodeSet::of(int universe, const std::vector<int>& members) {
  NodeSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

NodeSet NodeSet::from_flags(std::vector<char> flags) {
  NodeSet s;
  s.count_ = static_cast<int>(std::count_if(flags.begin(), flags.end(), [](char c) { return c != 0; }));
  for (char& c : flags) c = c ? 1 : 0;
  s.flags_ = std::move(flags);
  return s;
}

void NodeSet::insert(int v) {
  assert(v >= 0 && v < universe_size());
  if (!flags_[v]) {
    flags_[v] = 1;
    ++count_;
  }
}

std::vector<int> NodeSet::indices() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int v = 0; v < universe_size(); ++v) {
    if (flags_[v]) out.push_back(v);
  }
  return out;
}

NodeSet set_union(const NodeSet& a, const NodeSet& b) {
  assert(a.universe_size() == b.universe_size());
  NodeSet out(a.universe_size());
  for (int v = 0; v < a.universe_size(); ++v) {
    if (a.contains(v) || b.contains(v)) out.insert(v);
  }
  return out;
}

NodeSet set_intersection(const NodeSet& a, const NodeSet& b) {
  assert(a.universe_size() == b.universe_size());
  NodeSet out(a.universe_size());
  for (int v = 0; v < a.universe_size(); ++v) {
    if (a.contains(v) && b.contains(v)) out.insert(v);
  }
  return out;
}

NodeSet set_complement(const NodeSet& a) {
  NodeSet out(a.universe_size());
  for (int v = 0; v < a.universe_size(); ++v) {
    if (!a.contains(v)) out.insert(v);
  }
  return out;
}

bool BipartiteGraph::has_edge(int u_out, int v_in) const {
  auto row = left_row(u_out);
  return std::binary_search(row.begin(), row.end(), v_in);
}

std::vector<std::pair<int, int>> BipartiteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for (int v : left_row(u)) out.emplace_back(u, v);
  }
  return out;
}

DirectedGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  std::unordered_map<std::string, int> index_of;
  std::vector<std::string> names;
  auto intern = [&](std::string&& name) {
    auto [it, inserted] = index_of.try_emplace(std::move(name), static_cast<int>(names.size()));
    if (inserted) names.push_back(it->first);
    return it->second;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string src, dst, extra;
    if (!(tokens >> src >> dst)) {
      throw parse_error(lineno, "expected \"source target\", got \"" + line + "\"");
    }
    if (tokens >> extra) {
      throw parse_error(lineno, "expected 2 tokens, found more: \"" + line + "\"");
    }
    int u = intern(std::move(src));
    int v = intern(std::move(dst));
    edges.emplace_back(u, v);
  }
  if (names.empty()) throw empty_graph_error("input contains no edges");
  const int node_count = static_cast<int>(names.size());
  return DirectedGraph::from_edges(node_count, std::move(edges),
                                   Labels::from_names(std::move(names)));
}

DirectedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const DirectedGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += g.label_of(u);
    out += ' ';
    out += g.label_of(v);
    out += '\n';
  }
  return out;
}

DirectedGraph transpose(const DirectedGraph& g) {
  std::vector<std::pair<int, int>> reversed;
  reversed.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) reversed.emplace_back(v, u);
  return DirectedGraph::from_edges(g.n(), std::move(reversed), g.labels(),
                                   /*edges_are_unique=*/true);
}

BipartiteGraph to_bipartite(const DirectedGraph& g) {
  Csr left = g.out_csr();
  Csr right = build_csr(g.n(), g.edges(), /*swap_endpoints=*/true);
  return BipartiteGraph(g.n(), std::move(left), std::move(right), g.edge_count());
}

bool graphs_equal(const DirectedGraph& a, const DirectedGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  for (int i = 0; i < a.n(); ++i) {
    if (a.label_of(i) != b.label_of(i)) return false;
  }
  auto ea = a.edges();
  auto eb = b.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

}  // namespace ctrlhub
