#include "ctrlhub/drivers.hpp"

#include <algorithm>

#include "ctrlhub/errors.hpp"
#include "ctrlhub/matching.hpp"

namespace ctrlhub {

NodeSet all_possible_drivers(const DirectedGraph& g) {
  if (g.n() == 0) throw empty_graph_error("driver analysis needs a nonempty graph");
  BipartiteGraph b = to_bipartite(g);
  Matching m = maximum_matching(b);
  return even_alternating_reachability(b, m).reachable_right;
}

int min_driver_count(const DirectedGraph& g) {
  if (g.n() == 0) throw empty_graph_error("driver analysis needs a nonempty graph");
  Matching m = maximum_matching(to_bipartite(g));
  return std::max(g.n() - m.size(), 1);
}

NodeSet one_mds(const DirectedGraph& g) {
  if (g.n() == 0) throw empty_graph_error("driver analysis needs a nonempty graph");
  Matching m = maximum_matching(to_bipartite(g));
  NodeSet drivers(g.n());
  for (int v = 0; v < g.n(); ++v) {
    if (!m.right_matched(v)) drivers.insert(v);
  }
  if (drivers.empty()) drivers.insert(0);  // perfect matching: one signal into any node
  return drivers;
}

}  // namespace ctrlhub
