#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute_force.hpp"
#include "ctrlhub/errors.hpp"
#include "ctrlhub/matching.hpp"
#include "helpers.hpp"

using namespace ctrlhub;

TEST_CASE("chain has the unique matching (0,1),(1,2)") {
  Matching m = maximum_matching(to_bipartite(testutil::chain3()));
  CHECK(m.size() == 2);
  CHECK(m.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(m.match_of_left(2) == -1);
  CHECK(m.match_of_right(0) == -1);
  CHECK(m.left_matched(0));
  CHECK(!m.right_matched(0));
}

TEST_CASE("deterministic tie-break: ascending scan picks the lowest partners") {
  CHECK(maximum_matching(to_bipartite(testutil::star3())).pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(maximum_matching(to_bipartite(testutil::diamond())).pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});
}

TEST_CASE("matching size agrees with brute force on every digraph with n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    testutil::for_each_digraph(n, [](const DirectedGraph& g) {
      BipartiteGraph b = to_bipartite(g);
      Matching m = maximum_matching(b);
      auto all = testutil::brute_force_maximum_matchings(b);
      REQUIRE(!all.empty());
      CHECK(static_cast<int>(all.front().size()) == m.size());
      CHECK(is_maximum(b, m));
    });
  }
}

TEST_CASE("matching size agrees with brute force on random graphs") {
  testutil::RandomGraphs gen(0x5eed0002);
  for (int i = 0; i < 120; ++i) {
    DirectedGraph g = gen.next(4, 9, 0.5);
    BipartiteGraph b = to_bipartite(g);
    Matching m = maximum_matching(b);
    auto all = testutil::brute_force_maximum_matchings(b);
    CHECK(static_cast<int>(all.front().size()) == m.size());
  }
}

TEST_CASE("parallel and serial matchings are identical") {
  testutil::RandomGraphs gen(0x5eed0003);
  for (int i = 0; i < 40; ++i) {
    DirectedGraph g = gen.next(1, 60);
    BipartiteGraph b = to_bipartite(g);
    CHECK(maximum_matching(b) == serial::maximum_matching(b));
  }
  // large enough to cross the parallel-kernel cutoff
  DirectedGraph big = erdos_renyi_directed(1 << 16, 3 << 16, 99);
  BipartiteGraph b = to_bipartite(big);
  CHECK(maximum_matching(b) == serial::maximum_matching(b));
}

TEST_CASE("repeated runs return the identical matching") {
  DirectedGraph g = erdos_renyi_directed(200, 600, 7);
  BipartiteGraph b = to_bipartite(g);
  CHECK(maximum_matching(b) == maximum_matching(b));
}

TEST_CASE("is_maximum rejects augmentable matchings and validates structure") {
  BipartiteGraph b = to_bipartite(testutil::chain3());
  CHECK(!is_maximum(b, Matching(3)));  // empty matching can be augmented
  CHECK(!is_maximum(b, Matching::from_pairs(b, {{1, 2}})));
  // (0,2) is not an edge of the chain's split
  Matching bogus = Matching::from_partner_arrays({2, -1, -1}, {-1, -1, 0});
  CHECK_THROWS_AS(is_maximum(b, bogus), contract_error);
  CHECK_THROWS_AS(is_maximum(b, Matching(5)), contract_error);  // wrong universe
}

TEST_CASE("partner-array and pair constructors validate their input") {
  CHECK_THROWS_AS(Matching::from_partner_arrays({1}, {-1}), contract_error);
  CHECK_THROWS_AS(Matching::from_partner_arrays({1, -1}, {1, 0}), contract_error);
  CHECK_THROWS_AS(Matching::from_partner_arrays({3, -1}, {-1, -1}), contract_error);
  CHECK_THROWS_AS(Matching::from_partner_arrays({-1}, {-1, -1}), contract_error);
  Matching ok = Matching::from_partner_arrays({1, -1}, {-1, 0});
  CHECK(ok.size() == 1);

  BipartiteGraph b = to_bipartite(testutil::diamond());
  CHECK_THROWS_AS(Matching::from_pairs(b, {{0, 1}, {0, 2}}), contract_error);  // 0 twice
  CHECK_THROWS_AS(Matching::from_pairs(b, {{0, 3}}), contract_error);          // not an edge
  CHECK_THROWS_AS(Matching::from_pairs(b, {{0, 9}}), contract_error);          // out of range
  CHECK(Matching::from_pairs(b, {{0, 2}, {1, 3}}).size() == 2);
}

TEST_CASE("alternating reachability: chain") {
  BipartiteGraph b = to_bipartite(testutil::chain3());
  AlternatingReachability r = even_alternating_reachability(b, maximum_matching(b));
  CHECK(r.reachable_right == NodeSet::of(3, {0}));  // nothing leads into node 0
  CHECK(r.reachable_left == NodeSet::of(3, {}));
}

TEST_CASE("alternating reachability: star reaches every in-copy") {
  BipartiteGraph b = to_bipartite(testutil::star3());
  Matching m = Matching::from_pairs(b, {{0, 1}});
  AlternatingReachability r = even_alternating_reachability(b, m);
  CHECK(r.reachable_right == NodeSet::of(3, {0, 1, 2}));
  CHECK(r.reachable_left == NodeSet::of(3, {0}));
}

TEST_CASE("alternating reachability: perfect matching has no origins") {
  BipartiteGraph b = to_bipartite(testutil::cycle3());
  AlternatingReachability r = even_alternating_reachability(b, maximum_matching(b));
  CHECK(r.reachable_right.empty());
  CHECK(r.reachable_left.empty());
}

TEST_CASE("reachability always contains the unmatched right nodes") {
  testutil::RandomGraphs gen(0x5eed0004);
  for (int i = 0; i < 60; ++i) {
    DirectedGraph g = gen.next(2, 20);
    BipartiteGraph b = to_bipartite(g);
    Matching m = maximum_matching(b);
    AlternatingReachability r = even_alternating_reachability(b, m);
    for (int v = 0; v < b.n(); ++v) {
      if (!m.right_matched(v)) CHECK(r.reachable_right.contains(v));
    }
    // and the serial kernel sees the same sets
    AlternatingReachability s = serial::even_alternating_reachability(b, m);
    CHECK(r.reachable_right == s.reachable_right);
    CHECK(r.reachable_left == s.reachable_left);
  }
}

TEST_CASE("reachability is independent of the chosen maximum matching") {
  testutil::RandomGraphs gen(0x5eed0005);
  for (int i = 0; i < 60; ++i) {
    DirectedGraph g = gen.next(3, 7);
    BipartiteGraph b = to_bipartite(g);
    auto all = testutil::brute_force_maximum_matchings(b);
    REQUIRE(!all.empty());
    NodeSet expected =
        even_alternating_reachability(b, Matching::from_pairs(b, all.front())).reachable_right;
    for (const auto& pairs : all) {
      Matching m = Matching::from_pairs(b, pairs);
      CHECK(even_alternating_reachability(b, m).reachable_right == expected);
    }
  }
}
