#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ctrlhub/drivers.hpp"
#include "ctrlhub/errors.hpp"
#include "ctrlhub/hubs.hpp"
#include "ctrlhub/matching.hpp"
#include "ctrlhub/oracle.hpp"
#include "ctrlhub/report_io.hpp"
#include "ctrlhub/scheme.hpp"
#include "helpers.hpp"

using namespace ctrlhub;

TEST_CASE("input digests match the reference vectors") {
  CHECK(input_digest("") == "fnv1a64:cbf29ce484222325");    // offset basis
  CHECK(input_digest("a") == "fnv1a64:af63dc4c8601ec8c");   // published test vector
  CHECK(input_digest("1 2\n2 3\n") == input_digest("1 2\n2 3\n"));
  CHECK(input_digest("1 2\n2 3\n") != input_digest("1 2\n2 3"));
}

TEST_CASE("natural order: numeric by value first, then words") {
  CHECK(natural_less("2", "10"));
  CHECK(!natural_less("10", "2"));
  CHECK(natural_less("10", "a"));
  CHECK(!natural_less("a", "10"));
  CHECK(natural_less("a", "b"));
  CHECK(natural_less("007", "7"));   // equal value, lexical tie-break
  CHECK(!natural_less("7", "007"));
  CHECK(natural_less("9", "0010"));
  CHECK(!natural_less("5", "5"));
}

TEST_CASE("set labels come out naturally sorted") {
  DirectedGraph g = parse_edge_list("10 2\n2 n1\nn1 10\n");
  NodeSet all = set_complement(NodeSet(3));
  CHECK(sorted_labels(g, all) == std::vector<std::string>{"2", "10", "n1"});
}

TEST_CASE("hub report JSON carries labels and dimensions") {
  DirectedGraph g = parse_edge_list("1 2\n2 3\n");
  nlohmann::json j = hub_report_json(g, control_hubs(g));
  CHECK(j["n"] == 3);
  CHECK(j["edge_count"] == 2);
  CHECK(j["n_d"] == 1);
  CHECK(j["perfect_matching"] == false);
  CHECK(j["heads"] == nlohmann::json::array({"1"}));
  CHECK(j["tails"] == nlohmann::json::array({"3"}));
  CHECK(j["hubs"] == nlohmann::json::array({"2"}));
}

TEST_CASE("envelope serialization is byte-stable with alphabetical keys") {
  DirectedGraph g = parse_edge_list("1 2\n2 3\n");
  std::string text = to_json_text(envelope("hubs", input_digest("1 2\n2 3\n"),
                                           hub_report_json(g, control_hubs(g))));
  const std::string want = R"({
  "command": "hubs",
  "input_digest": "fnv1a64:1268d78351e5e383",
  "report": {
    "edge_count": 2,
    "heads": [
      "1"
    ],
    "hubs": [
      "2"
    ],
    "n": 3,
    "n_d": 1,
    "perfect_matching": false,
    "tails": [
      "3"
    ]
  },
  "tool": "ctrlhub",
  "version": "0.1.0"
}
)";
  CHECK(text == want);
  CHECK(text == to_json_text(envelope("hubs", input_digest("1 2\n2 3\n"),
                                      hub_report_json(g, control_hubs(g)))));
}

TEST_CASE("envelope omits the digest when there is no input") {
  nlohmann::json j = envelope("bench", "", nlohmann::json::object());
  CHECK(!j.contains("input_digest"));
  CHECK(j["tool"] == "ctrlhub");
  CHECK(j["version"] == "0.1.0");
}

TEST_CASE("driver report JSON") {
  DirectedGraph g = parse_edge_list("1 2\n1 3\n");
  nlohmann::json j = driver_report_json(g, all_possible_drivers(g), min_driver_count(g), one_mds(g));
  CHECK(j["drivers"] == nlohmann::json::array({"1", "2", "3"}));
  CHECK(j["n_d"] == 2);
  CHECK(j["mds"] == nlohmann::json::array({"1", "3"}));
}

TEST_CASE("scheme JSON lists paths, cycles, and roles by label") {
  DirectedGraph g = parse_edge_list("1 2\n2 3\n3 1\n");
  ControlScheme s = extract_scheme(g, maximum_matching(to_bipartite(g)));
  nlohmann::json j = scheme_json(g, s);
  CHECK(j["n"] == 3);
  CHECK(j["paths"] == nlohmann::json::array());
  CHECK(j["cycles"] == nlohmann::json::array({{"1", "2", "3"}}));
  CHECK(j["role_of"]["1"] == "cycle_member");
}

TEST_CASE("oracle JSON drops the set fields when truncated") {
  DirectedGraph g = parse_edge_list("1 2\n1 3\n2 4\n3 4\n");
  OracleReport full = oracle_hubs(g);
  nlohmann::json jf = oracle_json(g, full, true);
  CHECK(jf["matching_count"] == 4);
  CHECK(jf["agree"] == true);
  CHECK(jf["theorem_hubs"] == nlohmann::json::array());

  OracleReport cut = oracle_hubs(g, 2);
  nlohmann::json jc = oracle_json(g, cut, false);
  CHECK(jc["truncated"] == true);
  CHECK(jc["matching_count"] == 4);
  CHECK(!jc.contains("theorem_hubs"));
  CHECK(!jc.contains("agree"));
}

TEST_CASE("bench JSON includes the fitted slope once two rows exist") {
  std::vector<BenchRow> rows = {{1000, 5000, 0.010, 0.012}, {10000, 50000, 0.100, 0.120}};
  nlohmann::json j = bench_json("er", 5, 42, rows);
  CHECK(j["model"] == "er");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["n"] == 1000);
  CHECK(j["loglog_slope"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  nlohmann::json single = bench_json("er", 5, 42, {rows[0]});
  CHECK(!single.contains("loglog_slope"));
}

TEST_CASE("slope fit recovers a known exponent") {
  std::vector<BenchRow> rows;
  for (int n : {100, 1000, 10000}) {
    double t = 3.5e-7 * std::pow(static_cast<double>(n), 1.5);
    rows.push_back({n, 5l * n, t, t});
  }
  CHECK(loglog_slope(rows) == doctest::Approx(1.5).epsilon(1e-9));
  CHECK_THROWS_AS(loglog_slope(std::span<const BenchRow>{}), parameter_error);
}

TEST_CASE("text reports are stable and carry the same numbers") {
  DirectedGraph g = parse_edge_list("1 2\n2 3\n");
  std::string text = hub_report_text(g, control_hubs(g));
  CHECK(text ==
        "n: 3\n"
        "edge_count: 2\n"
        "n_d: 1\n"
        "perfect_matching: false\n"
        "heads (1): 1\n"
        "tails (1): 3\n"
        "hubs (1): 2\n");
  DirectedGraph star = parse_edge_list("1 2\n1 3\n");
  CHECK(driver_report_text(star, all_possible_drivers(star), min_driver_count(star),
                           one_mds(star)) ==
        "n: 3\n"
        "edge_count: 2\n"
        "drivers (3): 1 2 3\n"
        "n_d: 2\n"
        "mds (2): 1 3\n");
}
