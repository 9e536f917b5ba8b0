#pragma once

// Driver-node analysis: which nodes can receive an external control signal in
// some minimum driver set, and how many signals are needed.

#include "ctrlhub/graph.hpp"

namespace ctrlhub {

// Every node that is a driver in at least one minimum driver set. Computed as
// the even-alternating reachability of the in-copies under one maximum
// matching; the result is independent of which maximum matching is used.
// Throws empty_graph_error when g has no nodes.
NodeSet all_possible_drivers(const DirectedGraph& g);

// max(n - |maximum matching|, 1): a fully matched network still needs one
// input signal.
int min_driver_count(const DirectedGraph& g);

// One concrete minimum driver set: the unmatched in-copies of the
// deterministic maximum matching, or {0} when the matching is perfect.
NodeSet one_mds(const DirectedGraph& g);

}  // namespace ctrlhub
