#include "ctrlhub/bench.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <string>

#include "ctrlhub/errors.hpp"
#include "ctrlhub/generators.hpp"
#include "ctrlhub/hubs.hpp"

namespace ctrlhub {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<BenchRow> run_bench(std::string_view model, const std::vector<int>& sizes,
                                int edge_factor, std::uint64_t seed, std::ostream* progress) {
  const bool er = model == "er";
  if (!er && model != "sf") {
    throw parameter_error("unknown model \"" + std::string(model) + "\" (expected er or sf)");
  }
  if (sizes.empty()) throw parameter_error("benchmark needs at least one size");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw parameter_error("sizes must be strictly ascending");
  }
  if (edge_factor < 1) throw parameter_error("edge factor must be at least 1");

  SplitMix64 seeds(seed);
  std::vector<BenchRow> rows;
  rows.reserve(sizes.size());
  for (int n : sizes) {
    const std::int64_t l = static_cast<std::int64_t>(edge_factor) * n;
    const std::uint64_t sub_seed = seeds.next();
    DirectedGraph g = er ? erdos_renyi_directed(n, l, sub_seed)
                         : scale_free_directed(n, l, sub_seed);
    auto t0 = std::chrono::steady_clock::now();
    HubReport serial_report = serial::control_hubs(g);
    double serial_seconds = seconds_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    HubReport report = control_hubs(g);
    double par_seconds = seconds_since(t1);
    if (report.hubs.size() != serial_report.hubs.size()) {
      throw contract_error("parallel and serial pipelines disagree");  // unreachable by design
    }
    rows.push_back({n, l, par_seconds, serial_seconds});
    if (progress) {
      *progress << "n=" << n << " l=" << l << " hubs=" << report.hubs.size()
                << " parallel=" << par_seconds << "s serial=" << serial_seconds << "s\n";
    }
  }
  return rows;
}

double loglog_slope(std::span<const BenchRow> rows) {
  if (rows.size() < 2) throw parameter_error("slope needs at least two measurements");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const BenchRow& r : rows) {
    double x = std::log(static_cast<double>(r.n));
    double y = std::log(std::max(r.seconds, 1e-9));  // clamp: below timer resolution
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(rows.size());
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace ctrlhub
