#include "ctrlhub/matching.hpp"

#include <cassert>
#include <limits>
#include <string>

#include "ctrlhub/errors.hpp"

namespace ctrlhub {

namespace {

constexpr int dist_inf = std::numeric_limits<int>::max();

// Below this node count the OpenMP frontier scans cost more than they save.
constexpr int parallel_cutoff = 1 << 15;

struct Frame {
  int u;    // left node
  int arc;  // next adjacency slot of u to inspect
  int via;  // right node whose matched partner is u (-1 at the root)
};

// Layered BFS of one Hopcroft-Karp phase. Fills dist[] for left nodes and
// returns the length (in left hops) at which the first free right node
// appears, or -1 when no augmenting path exists. Distances are exact shortest
// distances, so the result does not depend on traversal order; the parallel
// path claims next-level nodes with a compare-exchange and produces the same
// dist[] as the serial path.
int bfs_layers(const BipartiteGraph& b, const std::vector<int>& ml, const std::vector<int>& mr,
               std::vector<int>& dist, std::vector<int>& frontier, std::vector<int>& next,
               bool parallel) {
  const int n = b.n();
  dist.assign(n, dist_inf);
  frontier.clear();
  for (int u = 0; u < n; ++u) {
    if (ml[u] < 0) {
      dist[u] = 0;
      frontier.push_back(u);
    }
  }
  int level = 0;
  while (!frontier.empty()) {
    bool found_free = false;
    next.clear();
#ifdef _OPENMP
    if (parallel && n >= parallel_cutoff) {
#pragma omp parallel
      {
        std::vector<int> local;
        bool local_free = false;
#pragma omp for nowait
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          for (int v : b.left_row(frontier[i])) {
            int w = mr[v];
            if (w < 0) {
              local_free = true;
              continue;
            }
            int expected = dist_inf;
            if (__atomic_compare_exchange_n(&dist[w], &expected, level + 1, false,
                                            __ATOMIC_RELAXED, __ATOMIC_RELAXED)) {
              local.push_back(w);
            }
          }
        }
#pragma omp critical
        {
          found_free = found_free || local_free;
          next.insert(next.end(), local.begin(), local.end());
        }
      }
    } else
#else
    (void)parallel;
#endif
    {
      for (int u : frontier) {
        for (int v : b.left_row(u)) {
          int w = mr[v];
          if (w < 0) {
            found_free = true;
          } else if (dist[w] == dist_inf) {
            dist[w] = level + 1;
            next.push_back(w);
          }
        }
      }
    }
    if (found_free) return level + 1;
    frontier.swap(next);
    ++level;
  }
  return -1;
}

// Depth-first search for one augmenting path of length dist_nil, restricted to
// the BFS layering. Iterative: recursion would blow the stack on long paths.
// Left nodes whose subtree fails are retired by setting dist to infinity.
bool augment_from(const BipartiteGraph& b, int root, std::vector<int>& dist, int dist_nil,
                  std::vector<int>& ml, std::vector<int>& mr, std::vector<Frame>& stack) {
  stack.clear();
  stack.push_back({root, 0, -1});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto row = b.left_row(f.u);
    bool descended = false;
    while (f.arc < static_cast<int>(row.size())) {
      int v = row[f.arc++];
      int w = mr[v];
      if (w < 0) {
        if (dist[f.u] + 1 == dist_nil) {
          // Free right node at the shortest layer: flip every edge on the
          // stack. via links walk the path back to the root.
          for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i) {
            ml[stack[i].u] = v;
            mr[v] = stack[i].u;
            v = stack[i].via;
          }
          return true;
        }
      } else if (dist[w] == dist[f.u] + 1) {
        stack.push_back({w, 0, v});  // invalidates f
        descended = true;
        break;
      }
    }
    if (descended) continue;
    dist[f.u] = dist_inf;
    stack.pop_back();
  }
  return false;
}

Matching hk_impl(const BipartiteGraph& b, bool parallel) {
  const int n = b.n();
  std::vector<int> ml(n, -1), mr(n, -1);
  // Greedy warm start; ascending scan keeps it deterministic.
  for (int u = 0; u < n; ++u) {
    for (int v : b.left_row(u)) {
      if (mr[v] < 0) {
        ml[u] = v;
        mr[v] = u;
        break;
      }
    }
  }
  std::vector<int> dist, frontier, next;
  std::vector<Frame> stack;
  for (;;) {
    int dist_nil = bfs_layers(b, ml, mr, dist, frontier, next, parallel);
    if (dist_nil < 0) break;
    for (int u = 0; u < n; ++u) {
      if (ml[u] < 0 && dist[u] == 0) augment_from(b, u, dist, dist_nil, ml, mr, stack);
    }
  }
  return Matching::from_partner_arrays(std::move(ml), std::move(mr));
}

AlternatingReachability alternating_impl(const BipartiteGraph& b, const Matching& m,
                                         bool parallel) {
  assert(is_maximum(b, m) && "reachability requires a maximum matching");
  const int n = b.n();
  std::vector<char> right_seen(n, 0), left_seen(n, 0);
  std::vector<int> frontier, next;
  for (int v = 0; v < n; ++v) {
    if (!m.right_matched(v)) {
      right_seen[v] = 1;
      frontier.push_back(v);
    }
  }
  while (!frontier.empty()) {
    next.clear();
#ifdef _OPENMP
    if (parallel && n >= parallel_cutoff) {
#pragma omp parallel
      {
        std::vector<int> local;
#pragma omp for nowait
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          int v = frontier[i];
          int skip = m.match_of_right(v);
          for (int u : b.right_row(v)) {
            if (u == skip) continue;
            if (__atomic_exchange_n(&left_seen[u], char{1}, __ATOMIC_RELAXED)) continue;
            int w = m.match_of_left(u);
            assert(w >= 0 && "free left node reachable; matching was not maximum");
            if (!__atomic_exchange_n(&right_seen[w], char{1}, __ATOMIC_RELAXED)) {
              local.push_back(w);
            }
          }
        }
#pragma omp critical
        next.insert(next.end(), local.begin(), local.end());
      }
    } else
#else
    (void)parallel;
#endif
    {
      for (int v : frontier) {
        int skip = m.match_of_right(v);
        for (int u : b.right_row(v)) {
          if (u == skip || left_seen[u]) continue;
          left_seen[u] = 1;
          int w = m.match_of_left(u);
          assert(w >= 0 && "free left node reachable; matching was not maximum");
          if (!right_seen[w]) {
            right_seen[w] = 1;
            next.push_back(w);
          }
        }
      }
    }
    frontier.swap(next);
  }
  AlternatingReachability r;
  r.reachable_right = NodeSet::from_flags(std::move(right_seen));
  r.reachable_left = NodeSet::from_flags(std::move(left_seen));
  return r;
}

}  // namespace

Matching Matching::from_partner_arrays(std::vector<int> match_of_left,
                                       std::vector<int> match_of_right) {
  if (match_of_left.size() != match_of_right.size()) {
    throw contract_error("partner arrays differ in length");
  }
  const int n = static_cast<int>(match_of_left.size());
  int size = 0;
  for (int u = 0; u < n; ++u) {
    int v = match_of_left[u];
    if (v < -1 || v >= n) throw contract_error("left partner out of range");
    if (v >= 0) {
      if (match_of_right[v] != u) {
        throw contract_error("partner arrays disagree at left node " + std::to_string(u));
      }
      ++size;
    }
  }
  for (int v = 0; v < n; ++v) {
    int u = match_of_right[v];
    if (u < -1 || u >= n) throw contract_error("right partner out of range");
    if (u >= 0 && match_of_left[u] != v) {
      throw contract_error("partner arrays disagree at right node " + std::to_string(v));
    }
  }
  Matching m;
  m.left_ = std::move(match_of_left);
  m.right_ = std::move(match_of_right);
  m.size_ = size;
  return m;
}

Matching Matching::from_pairs(const BipartiteGraph& b,
                              const std::vector<std::pair<int, int>>& pairs) {
  Matching m(b.n());
  for (const auto& [u, v] : pairs) {
    if (u < 0 || u >= b.n() || v < 0 || v >= b.n()) throw contract_error("pair out of range");
    if (m.left_[u] >= 0 || m.right_[v] >= 0) {
      throw contract_error("node appears in two pairs: (" + std::to_string(u) + ", " +
                           std::to_string(v) + ")");
    }
    if (!b.has_edge(u, v)) {
      throw contract_error("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") is not an edge");
    }
    m.left_[u] = v;
    m.right_[v] = u;
    ++m.size_;
  }
  return m;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int u = 0; u < n(); ++u) {
    if (left_[u] >= 0) out.emplace_back(u, left_[u]);
  }
  return out;
}

Matching maximum_matching(const BipartiteGraph& b) { return hk_impl(b, true); }

bool is_maximum(const BipartiteGraph& b, const Matching& m) {
  const int n = b.n();
  if (m.n() != n) throw contract_error("matching universe does not match graph");
  for (int u = 0; u < n; ++u) {
    int v = m.match_of_left(u);
    if (v < -1 || v >= n) throw contract_error("left partner out of range");
    if (v >= 0) {
      if (m.match_of_right(v) != u) throw contract_error("matching arrays are inconsistent");
      if (!b.has_edge(u, v)) {
        throw contract_error("matched pair (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") is not an edge");
      }
    }
  }
  for (int v = 0; v < n; ++v) {
    int u = m.match_of_right(v);
    if (u < -1 || u >= n) throw contract_error("right partner out of range");
    if (u >= 0 && m.match_of_left(u) != v) throw contract_error("matching arrays are inconsistent");
  }
  // Berge: maximum iff no augmenting path from a free left node.
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int u = 0; u < n; ++u) {
    if (!m.left_matched(u)) {
      seen[u] = 1;
      stack.push_back(u);
    }
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : b.left_row(u)) {
      int w = m.match_of_right(v);
      if (w < 0) return false;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

AlternatingReachability even_alternating_reachability(const BipartiteGraph& b, const Matching& m) {
  return alternating_impl(b, m, true);
}

namespace serial {

Matching maximum_matching(const BipartiteGraph& b) { return hk_impl(b, false); }

AlternatingReachability even_alternating_reachability(const BipartiteGraph& b, const Matching& m) {
  return alternating_impl(b, m, false);
}

}  // namespace serial

}  // namespace ctrlhub
