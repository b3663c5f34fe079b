#include "posiso/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace posiso {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// The two six-vertex worked-example graphs: octahedra presented as a pair of
// degree-4 hub vertices joined to a 4-cycle. Ids are 0-based; reports label
// them 1-based (id 0 prints as v1/u1).
Graph example_pair_g() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 4}, {0, 5},   // hub v1
                             {3, 1}, {3, 2}, {3, 4}, {3, 5},   // hub v4
                             {1, 2}, {2, 4}, {4, 5}, {5, 1}};  // cycle v2-v3-v5-v6
  return build_graph(6, edges);
}

Graph example_pair_h() {
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {0, 5},   // hub u1
                             {4, 1}, {4, 2}, {4, 3}, {4, 5},   // hub u5
                             {1, 2}, {2, 5}, {5, 3}, {3, 1}};  // cycle u2-u3-u6-u4
  return build_graph(6, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_<n> needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return build_graph(10, edges);
}

// 4x4 rook's graph: cells adjacent when they share a row or a column.
// Vertex id = 4*row + col.
Graph rook_4x4_graph() {
  std::vector<Edge> edges;
  auto id = [](int r, int c) { return 4 * r + c; };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      for (int c2 = c + 1; c2 < 4; ++c2) edges.emplace_back(id(r, c), id(r, c2));
      for (int r2 = r + 1; r2 < 4; ++r2) edges.emplace_back(id(r, c), id(r2, c));
    }
  return build_graph(16, edges);
}

// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
// {(1,0),(3,0),(0,1),(0,3),(1,1),(3,3)}. Same parameters as the rook's
// graph (16 vertices, 6-regular, 48 edges) but not isomorphic to it.
Graph shrikhande_graph() {
  std::vector<Edge> edges;
  auto id = [](int a, int b) { return 4 * a + b; };
  const int deltas[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& d : deltas)
        edges.emplace_back(id(a, b), id((a + d[0]) % 4, (b + d[1]) % 4));
  return build_graph(16, edges);
}

std::optional<int> parse_sized_name(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return std::nullopt;
  const std::string digits = name.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return std::stoi(digits);
}

}  // namespace

Seed derive_seed(Seed base, std::uint64_t stream) {
  return splitmix64(base ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

Graph gen_gnp(int n, double p, Seed seed) {
  Rng rng(seed);
  return gen_gnp(n, p, rng);
}

Graph gen_gnp(int n, double p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("gen_gnp: p must lie in [0,1]");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < p) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

Graph gen_connected_gnp(int n, double p, Seed seed) {
  Rng rng(seed);
  return gen_connected_gnp(n, p, rng);
}

Graph gen_connected_gnp(int n, double p, Rng& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g = gen_gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("gen_connected_gnp: no connected sample in 10000 attempts");
}

Permutation random_permutation(std::span<const VertexId> ids, Rng& rng) {
  std::vector<VertexId> targets(ids.begin(), ids.end());
  for (std::size_t i = targets.size(); i > 1; --i)
    std::swap(targets[i - 1], targets[rng.below(i)]);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) pairs.emplace_back(ids[i], targets[i]);
  return Permutation::from_pairs(pairs);
}

GraphPair gen_permuted_pair(const Graph& g, Seed seed) {
  Rng rng(seed);
  return gen_permuted_pair(g, rng);
}

GraphPair gen_permuted_pair(const Graph& g, Rng& rng) {
  if (g.empty()) throw std::invalid_argument("gen_permuted_pair: empty graph");
  auto ids = g.vertex_ids();
  Permutation p = random_permutation(ids, rng);
  return GraphPair{g, apply_permutation(g, p), "permuted", p};
}

Graph named_graph(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  if (name == "appendix_G") return example_pair_g();
  if (name == "appendix_H") return example_pair_h();
  if (name == "rook_4x4") return rook_4x4_graph();
  if (name == "shrikhande") return shrikhande_graph();
  if (auto n = parse_sized_name(name, "path_")) return path_graph(*n);
  if (auto n = parse_sized_name(name, "cycle_")) return cycle_graph(*n);
  if (auto n = parse_sized_name(name, "complete_")) return complete_graph(*n);
  throw std::invalid_argument("unknown named graph: " + name);
}

std::vector<std::string> named_graph_catalog() {
  // fixed graphs only; the sized families path_<n>, cycle_<n>, complete_<n>
  // resolve through named_graph as well
  return {"petersen", "appendix_G", "appendix_H", "rook_4x4", "shrikhande"};
}

}  // namespace posiso
