// Command-line front end: parse an edge list, run the requested analysis, and
// print a JSON or plain-text report. See the README for the schema and exit
// codes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctrlhub/bench.hpp"
#include "ctrlhub/drivers.hpp"
#include "ctrlhub/errors.hpp"
#include "ctrlhub/generators.hpp"
#include "ctrlhub/graph.hpp"
#include "ctrlhub/hubs.hpp"
#include "ctrlhub/matching.hpp"
#include "ctrlhub/oracle.hpp"
#include "ctrlhub/report_io.hpp"
#include "ctrlhub/scheme.hpp"
#include "ctrlhub/version.hpp"

namespace {

using namespace ctrlhub;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open input file: " + path);
  buf << f.rdbuf();
  if (f.bad()) throw io_error("failed reading input file: " + path);
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open output file: " + path);
  f << content;
  f.flush();
  if (!f) throw io_error("failed writing output file: " + path);
}

struct CommonOpts {
  std::string input = "-";
  std::string format = "json";
  std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("input", opts.input, "edge-list file, or - for standard input");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "write the report here instead of standard output");
}

int cmd_hubs(const CommonOpts& opts) {
  std::string text = read_input(opts.input);
  DirectedGraph g = parse_edge_list(text);
  HubReport r = control_hubs(g);
  std::string out = opts.format == "json"
                        ? to_json_text(envelope("hubs", input_digest(text), hub_report_json(g, r)))
                        : hub_report_text(g, r);
  write_output(opts.output, out);
  return exit_code::ok;
}

int cmd_drivers(const CommonOpts& opts) {
  std::string text = read_input(opts.input);
  DirectedGraph g = parse_edge_list(text);
  NodeSet drivers = all_possible_drivers(g);
  int n_d = min_driver_count(g);
  NodeSet mds = one_mds(g);
  std::string out =
      opts.format == "json"
          ? to_json_text(envelope("drivers", input_digest(text),
                                  driver_report_json(g, drivers, n_d, mds)))
          : driver_report_text(g, drivers, n_d, mds);
  write_output(opts.output, out);
  return exit_code::ok;
}

int cmd_scheme(const CommonOpts& opts) {
  std::string text = read_input(opts.input);
  DirectedGraph g = parse_edge_list(text);
  Matching m = maximum_matching(to_bipartite(g));
  ControlScheme s = extract_scheme(g, m);
  std::string out = opts.format == "json"
                        ? to_json_text(envelope("scheme", input_digest(text), scheme_json(g, s)))
                        : scheme_text(g, s);
  write_output(opts.output, out);
  return exit_code::ok;
}

int cmd_oracle(const CommonOpts& opts, std::uint64_t limit) {
  std::string text = read_input(opts.input);
  DirectedGraph g = parse_edge_list(text);
  OracleReport r = oracle_hubs(g, limit);
  bool agree = false;
  if (!r.truncated) agree = control_hubs(g).hubs == r.theorem_hubs;
  std::string out = opts.format == "json"
                        ? to_json_text(envelope("oracle", input_digest(text), oracle_json(g, r, agree)))
                        : oracle_text(g, r, agree);
  write_output(opts.output, out);
  if (r.truncated) return exit_code::truncated;
  return agree ? exit_code::ok : exit_code::failure;
}

int cmd_gen(const std::string& model, int n, std::int64_t l, std::uint64_t seed,
            bool allow_self_loops, const std::string& output) {
  DirectedGraph g = model == "er" ? erdos_renyi_directed(n, l, seed, allow_self_loops)
                                  : scale_free_directed(n, l, seed, allow_self_loops);
  write_output(output, to_edge_list(g));
  return exit_code::ok;
}

int cmd_bench(const std::string& model, const std::vector<int>& sizes, int edge_factor,
              std::uint64_t seed, const std::string& format, const std::string& output) {
  std::vector<BenchRow> rows = run_bench(model, sizes, edge_factor, seed, &std::cerr);
  std::string out = format == "json"
                        ? to_json_text(envelope("bench", "", bench_json(model, edge_factor, seed, rows)))
                        : bench_text(rows);
  write_output(output, out);
  return exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"control-hub analysis of directed networks"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);

  CommonOpts hubs_opts;
  CLI::App* hubs = app.add_subcommand("hubs", "head, tail, and control-hub sets of a network");
  add_common(hubs, hubs_opts);

  CommonOpts drivers_opts;
  CLI::App* drivers =
      app.add_subcommand("drivers", "possible driver nodes, their count, and one minimum set");
  add_common(drivers, drivers_opts);

  CommonOpts scheme_opts;
  CLI::App* scheme =
      app.add_subcommand("scheme", "control paths and cycles of the deterministic matching");
  add_common(scheme, scheme_opts);

  CommonOpts oracle_opts;
  std::uint64_t limit = 1'000'000;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force check of the hub sets by enumerating every maximum matching");
  add_common(oracle, oracle_opts);
  oracle->add_option("--limit", limit, "abandon enumeration beyond this many matchings")
      ->capture_default_str();

  std::string gen_model = "er";
  int gen_n = 0;
  std::int64_t gen_l = 0;
  std::uint64_t gen_seed = 0;
  bool gen_loops = false;
  std::string gen_output;
  CLI::App* gen = app.add_subcommand("gen", "write a seeded random graph as an edge list");
  gen->add_option("--model", gen_model, "er (uniform) or sf (preferential attachment)")
      ->check(CLI::IsMember({"er", "sf"}))
      ->capture_default_str();
  gen->add_option("--nodes", gen_n, "node count")->required();
  gen->add_option("--edges", gen_l, "edge count")->required();
  gen->add_option("--seed", gen_seed, "random seed")->capture_default_str();
  gen->add_flag("--allow-self-loops", gen_loops, "permit u -> u edges");
  gen->add_option("--output", gen_output, "write the edge list here instead of standard output");

  std::string bench_model = "er";
  std::vector<int> bench_sizes;
  int bench_factor = 5;
  std::uint64_t bench_seed = 42;
  std::string bench_format = "json";
  std::string bench_output;
  CLI::App* bench =
      app.add_subcommand("bench", "time the hub pipeline on generated graphs of growing size");
  bench->add_option("--model", bench_model, "er or sf")
      ->check(CLI::IsMember({"er", "sf"}))
      ->capture_default_str();
  bench->add_option("--sizes", bench_sizes, "comma-separated ascending node counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--edge-factor", bench_factor, "edges per node")->capture_default_str();
  bench->add_option("--seed", bench_seed, "random seed")->capture_default_str();
  bench->add_option("--format", bench_format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  bench->add_option("--output", bench_output, "write the report here instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_code::ok : exit_code::parameter;
  }

  try {
    if (hubs->parsed()) return cmd_hubs(hubs_opts);
    if (drivers->parsed()) return cmd_drivers(drivers_opts);
    if (scheme->parsed()) return cmd_scheme(scheme_opts);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, limit);
    if (gen->parsed()) return cmd_gen(gen_model, gen_n, gen_l, gen_seed, gen_loops, gen_output);
    if (bench->parsed())
      return cmd_bench(bench_model, bench_sizes, bench_factor, bench_seed, bench_format,
                       bench_output);
  } catch (const parse_error& e) {
    std::cerr << "ctrlhub: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const parameter_error& e) {
    std::cerr << "ctrlhub: parameter error: " << e.what() << "\n";
    return exit_code::parameter;
  } catch (const empty_graph_error& e) {
    std::cerr << "ctrlhub: empty graph: " << e.what() << "\n";
    return exit_code::empty_graph;
  } catch (const io_error& e) {
    std::cerr << "ctrlhub: " << e.what() << "\n";
    return exit_code::io;
  } catch (const std::exception& e) {
    std::cerr << "ctrlhub: " << e.what() << "\n";
    return exit_code::failure;
  }
  return exit_code::failure;  // unreachable: a subcommand is required
}
