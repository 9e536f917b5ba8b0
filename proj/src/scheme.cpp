#include "ctrlhub/scheme.hpp"

#include "ctrlhub/errors.hpp"

namespace ctrlhub {

std::string_view to_string(Role r) {
  switch (r) {
    case Role::head: return "head";
    case Role::middle: return "middle";
    case Role::tail: return "tail";
    case Role::isolated_driver: return "isolated_driver";
    case Role::cycle_member: return "cycle_member";
  }
  return "?";
}

namespace detail {

void SchemeWalk::run(int n, const std::vector<int>& match_of_left,
                     const std::vector<int>& match_of_right,
                     std::vector<std::vector<int>>* paths_out,
                     std::vector<std::vector<int>>* cycles_out) {
  role.assign(n, Role::cycle_member);
  covered_.assign(n, 0);
  path_count = 0;
  cycle_count = 0;
  path_edge_sum = 0;
  cycle_edge_sum = 0;
  if (paths_out) paths_out->clear();
  if (cycles_out) cycles_out->clear();

  // Paths: one per unmatched in-copy, following matched successors to the end.
  // Ascending start order sorts the result by head index for free.
  for (int v = 0; v < n; ++v) {
    if (match_of_right[v] >= 0) continue;
    seq_.clear();
    for (int cur = v; cur >= 0; cur = match_of_left[cur]) {
      seq_.push_back(cur);
      covered_[cur] = 1;
    }
    ++path_count;
    path_edge_sum += static_cast<std::int64_t>(seq_.size()) - 1;
    if (seq_.size() == 1) {
      role[v] = Role::isolated_driver;
    } else {
      role[seq_.front()] = Role::head;
      for (std::size_t i = 1; i + 1 < seq_.size(); ++i) role[seq_[i]] = Role::middle;
      role[seq_.back()] = Role::tail;
    }
    if (paths_out) paths_out->push_back(seq_);
  }

  // Everything left sits on a cycle of matched edges. The ascending scan meets
  // each cycle first at its lowest node, which is also the wanted rotation.
  for (int v = 0; v < n; ++v) {
    if (covered_[v]) continue;
    seq_.clear();
    int cur = v;
    do {
      seq_.push_back(cur);
      covered_[cur] = 1;
      cur = match_of_left[cur];
    } while (cur != v);
    ++cycle_count;
    cycle_edge_sum += static_cast<std::int64_t>(seq_.size());
    if (cycles_out) cycles_out->push_back(seq_);
  }
}

}  // namespace detail

ControlScheme extract_scheme(const DirectedGraph& g, const Matching& m) {
  BipartiteGraph b = to_bipartite(g);
  if (!is_maximum(b, m)) throw contract_error("scheme extraction requires a maximum matching");
  ControlScheme s;
  s.n = g.n();
  detail::SchemeWalk walk;
  walk.run(g.n(), m.left_partners(), m.right_partners(), &s.paths, &s.cycles);
  s.role_of = std::move(walk.role);
  return s;
}

bool schemes_differ(const ControlScheme& a, const ControlScheme& b) {
  if (a.n != b.n) throw contract_error("schemes cover different node universes");
  return a.paths != b.paths || a.cycles != b.cycles;
}

}  // namespace ctrlhub
