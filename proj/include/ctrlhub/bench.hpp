#pragma once

// Scaling benchmark for the hub pipeline: times the OpenMP kernels against the
// serial reference on generated graphs of increasing size.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "ctrlhub/graph.hpp"

namespace ctrlhub {

struct BenchRow {
  int n = 0;
  std::int64_t l = 0;
  double seconds = 0.0;         // parallel-kernel pipeline
  double serial_seconds = 0.0;  // serial reference pipeline
};

// Runs control_hubs on one generated graph per ladder size. model is "er" or
// "sf"; sizes must be strictly ascending; l = edge_factor * n. Generation time
// is excluded from the measurements. progress, when non-null, receives one
// line per completed row.
std::vector<BenchRow> run_bench(std::string_view model, const std::vector<int>& sizes,
                                int edge_factor, std::uint64_t seed,
                                std::ostream* progress = nullptr);

// Least-squares slope of log(seconds) against log(n).
double loglog_slope(std::span<const BenchRow> rows);

}  // namespace ctrlhub
