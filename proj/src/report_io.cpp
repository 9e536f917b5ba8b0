#include "ctrlhub/report_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ctrlhub/version.hpp"

namespace ctrlhub {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> path_labels(const DirectedGraph& g, const std::vector<int>& nodes) {
  std::vector<std::string> out;
  out.reserve(nodes.size());
  for (int v : nodes) out.push_back(g.label_of(v));
  return out;
}

void append_set_line(std::string& out, std::string_view name, const std::vector<std::string>& labels) {
  out += name;
  out += " (";
  out += std::to_string(labels.size());
  out += "):";
  for (const std::string& l : labels) {
    out += ' ';
    out += l;
  }
  out += '\n';
}

std::string join(const std::vector<std::string>& labels, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += labels[i];
  }
  return out;
}

}  // namespace

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string("fnv1a64:") + buf;
}

bool natural_less(const std::string& a, const std::string& b) {
  const bool na = all_digits(a), nb = all_digits(b);
  if (na != nb) return na;  // numbers sort before words
  if (na) {
    std::string_view va{a}, vb{b};
    va.remove_prefix(std::min(va.find_first_not_of('0'), va.size()));
    vb.remove_prefix(std::min(vb.find_first_not_of('0'), vb.size()));
    if (va.size() != vb.size()) return va.size() < vb.size();
    if (va != vb) return va < vb;
    return a < b;  // equal value (leading zeros): lexical tie-break
  }
  return a < b;
}

std::vector<std::string> sorted_labels(const DirectedGraph& g, const NodeSet& s) {
  std::vector<std::string> out = path_labels(g, s.indices());
  std::sort(out.begin(), out.end(), natural_less);
  return out;
}

nlohmann::json hub_report_json(const DirectedGraph& g, const HubReport& r) {
  return {
      {"n", r.n},
      {"edge_count", r.edge_count},
      {"n_d", r.n_d},
      {"perfect_matching", r.perfect_matching},
      {"heads", sorted_labels(g, r.heads)},
      {"tails", sorted_labels(g, r.tails)},
      {"hubs", sorted_labels(g, r.hubs)},
  };
}

nlohmann::json driver_report_json(const DirectedGraph& g, const NodeSet& drivers, int n_d,
                                  const NodeSet& mds) {
  return {
      {"n", g.n()},
      {"edge_count", g.edge_count()},
      {"drivers", sorted_labels(g, drivers)},
      {"n_d", n_d},
      {"mds", sorted_labels(g, mds)},
  };
}

nlohmann::json scheme_json(const DirectedGraph& g, const ControlScheme& s) {
  nlohmann::json paths = nlohmann::json::array();
  for (const auto& p : s.paths) paths.push_back(path_labels(g, p));
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : s.cycles) cycles.push_back(path_labels(g, c));
  nlohmann::json roles = nlohmann::json::object();
  for (int v = 0; v < s.n; ++v) roles[g.label_of(v)] = to_string(s.role_of[v]);
  return {
      {"n", s.n},
      {"paths", std::move(paths)},
      {"cycles", std::move(cycles)},
      {"role_of", std::move(roles)},
  };
}

nlohmann::json oracle_json(const DirectedGraph& g, const OracleReport& r, bool agree) {
  nlohmann::json j = {
      {"matching_count", r.matching_count},
      {"truncated", r.truncated},
  };
  if (!r.truncated) {
    j["head_union"] = sorted_labels(g, r.head_union);
    j["tail_union"] = sorted_labels(g, r.tail_union);
    j["theorem_hubs"] = sorted_labels(g, r.theorem_hubs);
    j["definitional_hubs"] = sorted_labels(g, r.definitional_hubs);
    j["agree"] = agree;
  }
  return j;
}

nlohmann::json bench_json(std::string_view model, int edge_factor, std::uint64_t seed,
                          const std::vector<BenchRow>& rows) {
  nlohmann::json out_rows = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    out_rows.push_back({
        {"n", r.n},
        {"l", r.l},
        {"seconds", r.seconds},
        {"serial_seconds", r.serial_seconds},
    });
  }
  nlohmann::json j = {
      {"model", std::string(model)},
      {"edge_factor", edge_factor},
      {"seed", seed},
      {"rows", std::move(out_rows)},
  };
  if (rows.size() >= 2) j["loglog_slope"] = loglog_slope(rows);
  return j;
}

nlohmann::json envelope(std::string_view command, const std::string& digest,
                        nlohmann::json report) {
  nlohmann::json j = {
      {"command", std::string(command)},
      {"report", std::move(report)},
      {"tool", std::string(tool_name)},
      {"version", std::string(tool_version)},
  };
  if (!digest.empty()) j["input_digest"] = digest;
  return j;
}

std::string to_json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string hub_report_text(const DirectedGraph& g, const HubReport& r) {
  std::string out;
  out += "n: " + std::to_string(r.n) + "\n";
  out += "edge_count: " + std::to_string(r.edge_count) + "\n";
  out += "n_d: " + std::to_string(r.n_d) + "\n";
  out += std::string("perfect_matching: ") + (r.perfect_matching ? "true" : "false") + "\n";
  append_set_line(out, "heads", sorted_labels(g, r.heads));
  append_set_line(out, "tails", sorted_labels(g, r.tails));
  append_set_line(out, "hubs", sorted_labels(g, r.hubs));
  return out;
}

std::string driver_report_text(const DirectedGraph& g, const NodeSet& drivers, int n_d,
                               const NodeSet& mds) {
  std::string out;
  out += "n: " + std::to_string(g.n()) + "\n";
  out += "edge_count: " + std::to_string(g.edge_count()) + "\n";
  append_set_line(out, "drivers", sorted_labels(g, drivers));
  out += "n_d: " + std::to_string(n_d) + "\n";
  append_set_line(out, "mds", sorted_labels(g, mds));
  return out;
}

std::string scheme_text(const DirectedGraph& g, const ControlScheme& s) {
  std::string out;
  out += "n: " + std::to_string(s.n) + "\n";
  out += "paths (" + std::to_string(s.paths.size()) + "):\n";
  for (const auto& p : s.paths) out += "  " + join(path_labels(g, p), " -> ") + "\n";
  out += "cycles (" + std::to_string(s.cycles.size()) + "):\n";
  for (const auto& c : s.cycles) out += "  " + join(path_labels(g, c), " -> ") + "\n";
  out += "role_of:\n";
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(s.n));
  for (int v = 0; v < s.n; ++v) labels.push_back(g.label_of(v));
  std::sort(labels.begin(), labels.end(), natural_less);
  for (const std::string& label : labels) {
    int v = g.index_of(label);
    out += "  " + label + ": " + std::string(to_string(s.role_of[v])) + "\n";
  }
  return out;
}

std::string oracle_text(const DirectedGraph& g, const OracleReport& r, bool agree) {
  std::string out;
  out += "matching_count: " + std::to_string(r.matching_count) + "\n";
  out += std::string("truncated: ") + (r.truncated ? "true" : "false") + "\n";
  if (!r.truncated) {
    append_set_line(out, "head_union", sorted_labels(g, r.head_union));
    append_set_line(out, "tail_union", sorted_labels(g, r.tail_union));
    append_set_line(out, "theorem_hubs", sorted_labels(g, r.theorem_hubs));
    append_set_line(out, "definitional_hubs", sorted_labels(g, r.definitional_hubs));
    out += std::string("agree: ") + (agree ? "true" : "false") + "\n";
  }
  return out;
}

std::string bench_text(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  for (const BenchRow& r : rows) {
    out << "n=" << r.n << " l=" << r.l << " seconds=" << r.seconds
        << " serial_seconds=" << r.serial_seconds << "\n";
  }
  if (rows.size() >= 2) out << "loglog_slope=" << loglog_slope(rows) << "\n";
  return out.str();
}

}  // namespace ctrlhub
