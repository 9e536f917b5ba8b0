#include "ctrlhub/oracle.hpp"

#include <bit>
#include <string>

#include "ctrlhub/errors.hpp"
#include "ctrlhub/scheme.hpp"

namespace ctrlhub {

void MaxMatchingEnumerator::prepare(const BipartiteGraph& b) {
  if (b.n() > oracle_max_nodes) {
    throw parameter_error("exhaustive enumeration handles at most " +
                          std::to_string(oracle_max_nodes) + " nodes, got " +
                          std::to_string(b.n()));
  }
  n_ = b.n();
  width_ = std::size_t{1} << n_;
  adj_.assign(static_cast<std::size_t>(n_), 0);
  for (int u = 0; u < n_; ++u) {
    for (int v : b.left_row(u)) adj_[u] |= std::uint32_t{1} << v;
  }
  best_.assign(static_cast<std::size_t>(n_ + 1) * width_, 0);
  count_.assign(static_cast<std::size_t>(n_ + 1) * width_, 0);

  // best[i][used]: largest number of pairs placeable with left nodes i..n-1
  // when the right nodes in `used` are taken; count[i][used]: how many ways.
  std::int8_t* best_next = best_.data() + static_cast<std::size_t>(n_) * width_;
  std::uint64_t* count_next = count_.data() + static_cast<std::size_t>(n_) * width_;
  for (std::size_t s = 0; s < width_; ++s) count_next[s] = 1;
  for (int i = n_ - 1; i >= 0; --i) {
    std::int8_t* best_row = best_.data() + static_cast<std::size_t>(i) * width_;
    std::uint64_t* count_row = count_.data() + static_cast<std::size_t>(i) * width_;
    best_next = best_row + width_;
    count_next = count_row + width_;
    for (std::uint32_t used = 0; used < width_; ++used) {
      std::int8_t best = best_next[used];  // leave left node i unmatched
      std::uint64_t ways = count_next[used];
      std::uint32_t avail = adj_[i] & ~used;
      while (avail) {
        std::uint32_t bit = avail & (0u - avail);
        avail ^= bit;
        std::int8_t cand = static_cast<std::int8_t>(1 + best_next[used | bit]);
        if (cand > best) {
          best = cand;
          ways = count_next[used | bit];
        } else if (cand == best) {
          ways += count_next[used | bit];
        }
      }
      best_row[used] = best;
      count_row[used] = ways;
    }
  }
  max_size_ = best_[0];
}

std::uint64_t MaxMatchingEnumerator::count() const { return count_.empty() ? 0 : count_[0]; }

bool MaxMatchingEnumerator::enumerate(
    std::uint64_t limit,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  if (count() > limit) return false;
  ml_.assign(static_cast<std::size_t>(n_), -1);
  mr_.assign(static_cast<std::size_t>(n_), -1);
  walk(0, 0, fn);
  return true;
}

// Branch order — matched partners ascending first, "leave unmatched" last —
// emits matchings in ascending lexicographic order of their sorted pair lists.
void MaxMatchingEnumerator::walk(
    int i, std::uint32_t used,
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
  if (i == n_) {
    fn(ml_, mr_);
    return;
  }
  const std::size_t next = static_cast<std::size_t>(i + 1) * width_;
  const std::int8_t want = best_[static_cast<std::size_t>(i) * width_ + used];
  std::uint32_t avail = adj_[i] & ~used;
  while (avail) {
    int v = std::countr_zero(avail);
    std::uint32_t bit = std::uint32_t{1} << v;
    avail ^= bit;
    if (1 + best_[next + (used | bit)] == want) {
      ml_[i] = v;
      mr_[v] = i;
      walk(i + 1, used | bit, fn);
      ml_[i] = -1;
      mr_[v] = -1;
    }
  }
  if (best_[next + used] == want) walk(i + 1, used, fn);
}

std::pair<std::vector<Matching>, bool> enumerate_maximum_matchings(const BipartiteGraph& b,
                                                                   std::uint64_t limit) {
  if (limit < 1) throw parameter_error("matching limit must be at least 1");
  MaxMatchingEnumerator e;
  e.prepare(b);
  std::vector<Matching> out;
  bool complete = e.enumerate(limit, [&](const std::vector<int>& ml, const std::vector<int>& mr) {
    out.push_back(Matching::from_partner_arrays(std::vector<int>(ml), std::vector<int>(mr)));
  });
  return {std::move(out), !complete};
}

OracleReport oracle_hubs(const DirectedGraph& g, std::uint64_t limit) {
  if (g.n() == 0) throw empty_graph_error("oracle needs a nonempty graph");
  if (limit < 1) throw parameter_error("matching limit must be at least 1");
  const int n = g.n();
  MaxMatchingEnumerator e;
  e.prepare(to_bipartite(g));

  OracleReport r;
  r.matching_count = e.count();
  r.head_union = NodeSet(n);
  r.tail_union = NodeSet(n);
  r.theorem_hubs = NodeSet(n);
  r.definitional_hubs = NodeSet(n);

  std::uint32_t heads = 0, tails = 0, middle_all = (std::uint32_t{1} << n) - 1;
  detail::SchemeWalk walk;
  bool complete = e.enumerate(limit, [&](const std::vector<int>& ml, const std::vector<int>& mr) {
    walk.run(n, ml, mr);
    std::uint32_t h = 0, t = 0, mid = 0;
    for (int v = 0; v < n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      switch (walk.role[v]) {
        case Role::head: h |= bit; break;
        case Role::tail: t |= bit; break;
        case Role::isolated_driver: h |= bit; t |= bit; break;
        case Role::middle: mid |= bit; break;
        case Role::cycle_member: break;
      }
    }
    heads |= h;
    tails |= t;
    middle_all &= mid;
  });
  if (!complete) {
    r.truncated = true;
    return r;
  }
  for (int v = 0; v < n; ++v) {
    const std::uint32_t bit = std::uint32_t{1} << v;
    if (heads & bit) r.head_union.insert(v);
    if (tails & bit) r.tail_union.insert(v);
    if (!((heads | tails) & bit)) r.theorem_hubs.insert(v);
    if (middle_all & bit) r.definitional_hubs.insert(v);
  }
  return r;
}

}  // namespace ctrlhub
