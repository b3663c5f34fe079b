#include <doctest.h>

#include <stdexcept>

#include "posiso/graph.hpp"

using namespace posiso;

TEST_CASE("build_graph basics") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<VertexId>{0, 2});
  CHECK(g.vertex_ids() == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("duplicate edges collapse") {
  Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);   // loop
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(build_graph(-1, {}), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps original ids") {
  Graph g = Graph::induced(10, std::vector<VertexId>{2, 5, 7},
                           std::vector<Edge>{{2, 5}, {5, 7}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.has_vertex(5));
  CHECK_FALSE(g.has_vertex(0));
  CHECK(g.min_vertex_id() == 2);
  CHECK(g.vertex_ids() == std::vector<VertexId>{2, 5, 7});
  CHECK_THROWS_AS(g.degree(0), std::invalid_argument);
  CHECK_THROWS_AS((void)Graph::induced(10, std::vector<VertexId>{2},
                                       std::vector<Edge>{{2, 5}}),
                  std::invalid_argument);  // edge endpoint not present
}

TEST_CASE("edges come out sorted and unordered pairs are canonical") {
  Graph g = build_graph(4, {{3, 2}, {1, 0}, {2, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}});
}

TEST_CASE("remove_vertex keeps ids stable") {
  Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Graph h = remove_vertex(g, 1);
  CHECK(h.vertex_count() == 3);
  CHECK(h.edge_count() == 2);
  CHECK(h.has_vertex(3));
  CHECK_FALSE(h.has_vertex(1));
  CHECK(h.has_edge(2, 3));
  CHECK_FALSE(h.has_edge(0, 1));
  CHECK_THROWS_AS(remove_vertex(h, 1), std::invalid_argument);
}

TEST_CASE("degree_vector is sorted descending") {
  Graph g = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(degree_vector(g) == DegreeVector{3, 1, 1, 1});
}

TEST_CASE("is_connected") {
  CHECK(is_connected(build_graph(3, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_connected(build_graph(3, {{0, 1}})));
  CHECK(is_connected(build_graph(1, {})));
  CHECK_THROWS_AS(is_connected(build_graph(0, {})), std::invalid_argument);
}

TEST_CASE("semantic equality ignores capacity") {
  Graph a = build_graph(3, {{0, 1}, {1, 2}});
  Graph b = remove_vertex(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 3);
  CHECK(a == b);
  CHECK_FALSE(a == build_graph(3, {{0, 1}}));
}

TEST_CASE("permutation apply and inverse") {
  Permutation p = Permutation::from_pairs({{0, 2}, {1, 0}, {2, 1}});
  CHECK(p.apply(0) == 2);
  CHECK(p.inverse().apply(2) == 0);
  CHECK(p.defined_at(1));
  CHECK_FALSE(p.defined_at(5));
  CHECK_THROWS_AS(p.apply(5), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_pairs({{0, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_pairs({{0, 1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("apply_permutation relabels edges") {
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  Permutation p = Permutation::from_pairs({{0, 2}, {1, 0}, {2, 1}});
  Graph h = apply_permutation(g, p);
  CHECK(h.has_edge(2, 0));
  CHECK(h.has_edge(0, 1));
  CHECK(h.edge_count() == 2);
  Permutation partial = Permutation::from_pairs({{0, 1}});
  CHECK_THROWS_AS(apply_permutation(g, partial), std::invalid_argument);
}
