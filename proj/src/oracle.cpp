#include "posiso/oracle.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

namespace posiso {

namespace {

void require_equal_sizes(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("exact_isomorphism: vertex counts differ");
}

Permutation pairs_to_permutation(const std::vector<VertexId>& g_order,
                                 const std::vector<VertexId>& assigned) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(g_order.size());
  for (std::size_t i = 0; i < g_order.size(); ++i)
    pairs.emplace_back(g_order[i], assigned[i]);
  return Permutation::from_pairs(pairs);
}

// Assignment order: BFS over each component from its highest-degree vertex,
// so every new vertex (after a component seed) touches mapped territory.
std::vector<VertexId> assignment_order(const Graph& g) {
  std::vector<VertexId> order;
  order.reserve(g.vertex_count());
  std::vector<char> seen(g.capacity(), 0);
  auto ids = g.vertex_ids();
  while (order.size() < static_cast<std::size_t>(g.vertex_count())) {
    VertexId seed = -1;
    for (VertexId v : ids)
      if (!seen[v] && (seed < 0 || g.degree(v) > g.degree(seed))) seed = v;
    seen[seed] = 1;
    std::queue<VertexId> frontier;
    frontier.push(seed);
    order.push_back(seed);
    while (!frontier.empty()) {
      VertexId v = frontier.front();
      frontier.pop();
      for (VertexId u : g.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = 1;
        order.push_back(u);
        frontier.push(u);
      }
    }
  }
  return order;
}

struct Backtracker {
  const Graph& g;
  const Graph& h;
  std::vector<VertexId> g_order;
  std::vector<VertexId> h_candidates;  // sorted by degree then id
  std::vector<VertexId> assigned;      // parallel to g_order
  std::vector<char> used;              // by h id

  bool consistent(std::size_t depth, VertexId u) const {
    VertexId v = g_order[depth];
    for (std::size_t i = 0; i < depth; ++i) {
      bool ge = g.has_edge(v, g_order[i]);
      bool he = h.has_edge(u, assigned[i]);
      if (ge != he) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == g_order.size()) return true;
    VertexId v = g_order[depth];
    int want = g.degree(v);
    for (VertexId u : h_candidates) {
      if (used[u] || h.degree(u) != want) continue;
      if (!consistent(depth, u)) continue;
      used[u] = 1;
      assigned[depth] = u;
      if (search(depth + 1)) return true;
      used[u] = 0;
    }
    return false;
  }
};

}  // namespace

OracleResult exact_isomorphism(const Graph& g, const Graph& h) {
  require_equal_sizes(g, h);
  if (g.empty()) return {true, Permutation{}};
  if (g.edge_count() != h.edge_count() || degree_vector(g) != degree_vector(h))
    return {false, std::nullopt};

  Backtracker bt{g, h, assignment_order(g), h.vertex_ids(), {}, {}};
  std::stable_sort(bt.h_candidates.begin(), bt.h_candidates.end(),
                   [&h](VertexId a, VertexId b) { return h.degree(a) < h.degree(b); });
  bt.assigned.resize(bt.g_order.size(), -1);
  bt.used.assign(h.capacity(), 0);
  if (!bt.search(0)) return {false, std::nullopt};
  return {true, pairs_to_permutation(bt.g_order, bt.assigned)};
}

OracleResult exact_isomorphism_exhaustive(const Graph& g, const Graph& h) {
  require_equal_sizes(g, h);
  if (g.vertex_count() > 10)
    throw std::invalid_argument("exact_isomorphism_exhaustive: capped at n <= 10");
  if (g.empty()) return {true, Permutation{}};
  if (g.edge_count() != h.edge_count()) return {false, std::nullopt};

  const auto g_ids = g.vertex_ids();
  const auto g_edges = g.edges();
  std::vector<VertexId> target = h.vertex_ids();
  std::sort(target.begin(), target.end());
  do {
    std::vector<VertexId> image(g.capacity(), -1);
    for (std::size_t i = 0; i < g_ids.size(); ++i) image[g_ids[i]] = target[i];
    bool ok = true;
    for (auto [a, b] : g_edges) {
      if (!h.has_edge(image[a], image[b])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (VertexId v : g_ids) pairs.emplace_back(v, image[v]);
      return {true, Permutation::from_pairs(pairs)};
    }
  } while (std::next_permutation(target.begin(), target.end()));
  return {false, std::nullopt};
}

}  // namespace posiso
