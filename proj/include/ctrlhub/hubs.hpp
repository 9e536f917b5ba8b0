#pragma once

// Control-hub identification. Heads are the possible drivers of the graph,
// tails are the possible drivers of its transpose, and the hubs are everything
// else: nodes that sit strictly inside a control path no matter which control
// scheme is chosen.

#include <cstdint>

#include "ctrlhub/graph.hpp"

namespace ctrlhub {

struct HubReport {
  NodeSet heads;
  NodeSet tails;
  NodeSet hubs;           // complement of heads-union-tails
  int n_d = 0;            // minimum driver count
  bool perfect_matching = false;
  int n = 0;
  std::int64_t edge_count = 0;
};

NodeSet head_nodes(const DirectedGraph& g);
NodeSet tail_nodes(const DirectedGraph& g);

// Runs the two driver enumerations (graph and transpose) and joins them.
// When the matching is perfect the formula degenerates to hubs = all nodes
// even though no control paths exist; perfect_matching flags that regime.
HubReport control_hubs(const DirectedGraph& g);

namespace serial {
HubReport control_hubs(const DirectedGraph& g);
}

}  // namespace ctrlhub
