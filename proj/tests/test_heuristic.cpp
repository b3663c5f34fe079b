#include <doctest.h>

#include <stdexcept>

#include "posiso/corpus.hpp"
#include "posiso/formats.hpp"
#include "posiso/heuristic.hpp"
#include "posiso/oracle.hpp"

using namespace posiso;

TEST_CASE("precheck compares counts and degree vectors") {
  CHECK(precheck(named_graph("complete_3"), named_graph("complete_3")));
  CHECK_FALSE(precheck(named_graph("complete_3"), named_graph("path_3")));
  CHECK_FALSE(precheck(named_graph("path_3"), named_graph("path_4")));
  // same n and m, different degree vector: star vs path on 4 vertices is
  // caught only by degrees
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(precheck(star, named_graph("path_4")));
  CHECK_THROWS_AS(precheck(build_graph(3, {{0, 1}}), star), std::invalid_argument);
  CHECK_THROWS_AS(precheck(build_graph(0, {}), star), std::invalid_argument);
}

TEST_CASE("self pair removes identically") {
  Graph k3 = named_graph("complete_3");
  DecisionResult r = decide_isomorphism(k3, k3);
  CHECK(r.verdict.isomorphic());
  CHECK(r.trace.complete());
  CHECK(r.trace.rounds ==
        std::vector<std::pair<VertexId, VertexId>>{{0, 0}, {1, 1}, {2, 2}});
  CHECK(verify_mapping(k3, k3, extract_candidate_mapping(r.trace)));
}

TEST_CASE("example pair: accepted, but the candidate mapping is not an isomorphism") {
  Graph g = named_graph("appendix_G");
  Graph h = named_graph("appendix_H");
  DecisionResult r = decide_isomorphism(g, h);
  CHECK(r.verdict.isomorphic());
  REQUIRE(r.trace.complete());
  CHECK(r.trace.rounds == std::vector<std::pair<VertexId, VertexId>>{
                              {0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
  // identity pairing maps edge {0,4} onto the hub non-edge {0,4} of the
  // other graph, so the mapping fails even though the graphs are isomorphic
  CHECK_FALSE(verify_mapping(g, h, extract_candidate_mapping(r.trace)));
  CHECK(exact_isomorphism(g, h).isomorphic);
}

TEST_CASE("degree-matched non-isomorphic pair strands the first pivot") {
  Graph prism = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                 {0, 3}, {1, 4}, {2, 5}});
  Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                               {2, 3}, {2, 4}, {2, 5}});
  CHECK(precheck(prism, k33));
  DecisionResult r = decide_isomorphism(prism, k33);
  CHECK_FALSE(r.verdict.isomorphic());
  REQUIRE(r.verdict.failure.has_value());
  CHECK(r.verdict.failure->kind == FailureKind::UnmatchedPivot);
  CHECK(r.verdict.failure->round == 1);
  CHECK(r.verdict.failure->pivot == 0);
  CHECK(r.trace.rounds.empty());
}

TEST_CASE("matched removal can disconnect and force a rejection") {
  // two copies of the same star: round 1 removes both centers, stranding
  // isolated leaves; the loop rejects rather than inventing levels for a
  // disconnected remainder
  Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  DecisionResult r = decide_isomorphism(star, star);
  CHECK_FALSE(r.verdict.isomorphic());
  REQUIRE(r.verdict.failure.has_value());
  CHECK(r.verdict.failure->kind == FailureKind::DisconnectedIntermediate);
  CHECK(r.verdict.failure->round == 2);
  CHECK(r.trace.rounds == std::vector<std::pair<VertexId, VertexId>>{{0, 0}});
}

TEST_CASE("frozen stranded pivot on an isomorphic pair") {
  // mined counterexample: a permuted pair the loop rejects in round 2 with
  // both intermediates still connected; greedy first-match does not backtrack
  Graph g = parse_graph6("Gw[MmK");
  Graph h = parse_graph6("Gxiio[");
  CHECK(exact_isomorphism(g, h).isomorphic);
  DecisionResult r = decide_isomorphism(g, h);
  CHECK_FALSE(r.verdict.isomorphic());
  REQUIRE(r.verdict.failure.has_value());
  CHECK(r.verdict.failure->kind == FailureKind::UnmatchedPivot);
  CHECK(r.verdict.failure->round == 2);
  CHECK(r.verdict.failure->pivot == 1);
}

TEST_CASE("inputs must be connected and nonempty") {
  Graph ok = named_graph("path_3");
  Graph split = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(decide_isomorphism(ok, split), std::invalid_argument);
  CHECK_THROWS_AS(decide_isomorphism(split, ok), std::invalid_argument);
  CHECK_THROWS_AS(decide_isomorphism(build_graph(0, {}), ok), std::invalid_argument);
}

TEST_CASE("observer sees every round before removal") {
  Graph g = named_graph("appendix_G");
  Graph h = named_graph("appendix_H");
  int calls = 0;
  decide_isomorphism(g, h, {}, [&](const RoundView& view) {
    ++calls;
    CHECK(view.round == calls);
    CHECK(view.pivot == calls - 1);  // ids leave in ascending order here
    CHECK(view.left.has_vertex(view.pivot));
    REQUIRE(view.matched.has_value());
    CHECK(view.right.has_vertex(*view.matched));
    CHECK(view.pivot_digraph.decomposition().root == view.pivot);
  });
  CHECK(calls == 6);
}

TEST_CASE("round-1 match exists for every vertex of a permuted pair") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng.below(7));
    Graph g = gen_connected_gnp(n, 0.5, rng);
    GraphPair pair = gen_permuted_pair(g, rng);
    for (VertexId v : pair.left.vertex_ids()) {
      LevelProfile profile = build_auxiliary_digraph(pair.left, v).level_profile();
      CHECK(find_first_match(pair.right, profile, ScanMode::Serial).has_value());
    }
  }
}

TEST_CASE("candidate extraction requires a complete trace") {
  RemovalTrace t;
  t.input_vertex_count = 3;
  t.rounds = {{0, 1}};
  CHECK_THROWS_AS(extract_candidate_mapping(t), std::invalid_argument);
}

TEST_CASE("verify_mapping rejects partial or non-injective maps") {
  Graph k3 = named_graph("complete_3");
  CHECK(verify_mapping(k3, k3, Permutation::from_pairs({{0, 0}, {1, 1}, {2, 2}})));
  CHECK(verify_mapping(k3, k3, Permutation::from_pairs({{0, 2}, {1, 0}, {2, 1}})));
  CHECK_THROWS_AS(verify_mapping(k3, k3, Permutation::from_pairs({{0, 0}, {1, 1}})),
                  std::invalid_argument);
  Graph p3 = named_graph("path_3");
  // bijection exists but p3 has fewer edges; mapping must not verify
  CHECK_FALSE(verify_mapping(p3, k3, Permutation::from_pairs({{0, 0}, {1, 1}, {2, 2}})));
}
