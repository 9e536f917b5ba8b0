#pragma once

// Report serialization for the command-line tool: JSON (machine mode) and
// plain text. Node sets are always emitted as external labels in natural
// order, so output is byte-stable for a fixed input.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ctrlhub/bench.hpp"
#include "ctrlhub/graph.hpp"
#include "ctrlhub/hubs.hpp"
#include "ctrlhub/oracle.hpp"
#include "ctrlhub/scheme.hpp"

namespace ctrlhub {

// FNV-1a 64-bit over the raw input bytes, rendered as "fnv1a64:<16 hex>".
std::string input_digest(std::string_view bytes);

// Numeric labels sort by value (ties broken lexically), numeric before
// non-numeric, everything else lexicographic.
bool natural_less(const std::string& a, const std::string& b);

std::vector<std::string> sorted_labels(const DirectedGraph& g, const NodeSet& s);

nlohmann::json hub_report_json(const DirectedGraph& g, const HubReport& r);
nlohmann::json driver_report_json(const DirectedGraph& g, const NodeSet& drivers, int n_d,
                                  const NodeSet& mds);
nlohmann::json scheme_json(const DirectedGraph& g, const ControlScheme& s);
nlohmann::json oracle_json(const DirectedGraph& g, const OracleReport& r, bool agree);
nlohmann::json bench_json(std::string_view model, int edge_factor, std::uint64_t seed,
                          const std::vector<BenchRow>& rows);

// Top-level envelope: command, optional input digest, report payload, tool
// name and version. Keys serialize alphabetically.
nlohmann::json envelope(std::string_view command, const std::string& digest,
                        nlohmann::json report);

// dump(2) with a trailing newline; the byte-stable machine format.
std::string to_json_text(const nlohmann::json& j);

std::string hub_report_text(const DirectedGraph& g, const HubReport& r);
std::string driver_report_text(const DirectedGraph& g, const NodeSet& drivers, int n_d,
                               const NodeSet& mds);
std::string scheme_text(const DirectedGraph& g, const ControlScheme& s);
std::string oracle_text(const DirectedGraph& g, const OracleReport& r, bool agree);
std::string bench_text(const std::vector<BenchRow>& rows);

}  // namespace ctrlhub
