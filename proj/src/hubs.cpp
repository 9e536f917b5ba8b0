#include "ctrlhub/hubs.hpp"

#include <algorithm>

#include "ctrlhub/drivers.hpp"
#include "ctrlhub/errors.hpp"
#include "ctrlhub/matching.hpp"

namespace ctrlhub {

namespace {

struct SideResult {
  NodeSet drivers;
  int matching_size = 0;
};

SideResult analyze_side(const DirectedGraph& g, bool parallel) {
  BipartiteGraph b = to_bipartite(g);
  Matching m = parallel ? maximum_matching(b) : serial::maximum_matching(b);
  AlternatingReachability r = parallel ? even_alternating_reachability(b, m)
                                       : serial::even_alternating_reachability(b, m);
  return {std::move(r.reachable_right), m.size()};
}

HubReport control_hubs_impl(const DirectedGraph& g, bool parallel) {
  if (g.n() == 0) throw empty_graph_error("hub analysis needs a nonempty graph");
  DirectedGraph gt = transpose(g);
  SideResult fwd, bwd;
  // The two driver enumerations share no state; run them side by side.
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel sections
    {
#pragma omp section
      fwd = analyze_side(g, true);
#pragma omp section
      bwd = analyze_side(gt, true);
    }
  } else
#endif
  {
    fwd = analyze_side(g, parallel);
    bwd = analyze_side(gt, parallel);
  }

  HubReport report;
  report.heads = std::move(fwd.drivers);
  report.tails = std::move(bwd.drivers);
  report.hubs = set_complement(set_union(report.heads, report.tails));
  report.n_d = std::max(g.n() - fwd.matching_size, 1);
  report.perfect_matching = fwd.matching_size == g.n();
  report.n = g.n();
  report.edge_count = g.edge_count();
  return report;
}

}  // namespace

NodeSet head_nodes(const DirectedGraph& g) { return all_possible_drivers(g); }

NodeSet tail_nodes(const DirectedGraph& g) { return all_possible_drivers(transpose(g)); }

HubReport control_hubs(const DirectedGraph& g) { return control_hubs_impl(g, true); }

namespace serial {
HubReport control_hubs(const DirectedGraph& g) { return control_hubs_impl(g, false); }
}

}  // namespace ctrlhub
