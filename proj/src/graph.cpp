#include "posiso/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace posiso {

Graph Graph::induced(int capacity, std::span<const VertexId> vertices,
                     std::span<const Edge> edges) {
  if (capacity < 0) throw std::invalid_argument("graph capacity must be non-negative");
  Graph g;
  g.present_.assign(capacity, 0);
  g.adj_.assign(capacity, {});
  for (VertexId v : vertices) {
    if (v < 0 || v >= capacity)
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    if (g.present_[v])
      throw std::invalid_argument("duplicate vertex id " + std::to_string(v));
    g.present_[v] = 1;
  }
  g.vertex_count_ = static_cast<int>(vertices.size());
  for (auto [u, v] : edges) {
    if (u == v)
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (!g.has_vertex(u) || !g.has_vertex(v))
      throw std::invalid_argument("edge endpoint " + std::to_string(g.has_vertex(u) ? v : u) +
                                  " is not a vertex");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.edge_count_ = 0;
  for (VertexId v = 0; v < capacity; ++v) {
    auto& nbrs = g.adj_[v];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += static_cast<int>(nbrs.size());
  }
  g.edge_count_ /= 2;
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  if (!has_vertex(v))
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  return adj_[v];
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

std::vector<VertexId> Graph::vertex_ids() const {
  std::vector<VertexId> ids;
  ids.reserve(vertex_count_);
  for (VertexId v = 0; v < capacity(); ++v)
    if (present_[v]) ids.push_back(v);
  return ids;
}

VertexId Graph::min_vertex_id() const {
  for (VertexId v = 0; v < capacity(); ++v)
    if (present_[v]) return v;
  throw std::invalid_argument("min_vertex_id on empty graph");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId v = 0; v < capacity(); ++v) {
    if (!present_[v]) continue;
    for (VertexId u : adj_[v])
      if (v < u) out.emplace_back(v, u);
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count_ != b.vertex_count_ || a.edge_count_ != b.edge_count_)
    return false;
  int common = std::min(a.capacity(), b.capacity());
  for (VertexId v = 0; v < common; ++v) {
    if (a.present_[v] != b.present_[v]) return false;
    if (a.present_[v] && a.adj_[v] != b.adj_[v]) return false;
  }
  // Ids beyond the shorter capacity must all be absent.
  for (VertexId v = common; v < a.capacity(); ++v)
    if (a.present_[v]) return false;
  for (VertexId v = common; v < b.capacity(); ++v)
    if (b.present_[v]) return false;
  return true;
}

Permutation Permutation::from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs) {
  Permutation p;
  p.pairs_.assign(pairs.begin(), pairs.end());
  std::sort(p.pairs_.begin(), p.pairs_.end());
  VertexId max_src = -1;
  std::vector<VertexId> targets;
  targets.reserve(pairs.size());
  for (std::size_t i = 0; i < p.pairs_.size(); ++i) {
    auto [s, t] = p.pairs_[i];
    if (s < 0 || t < 0)
      throw std::invalid_argument("permutation ids must be non-negative");
    if (i > 0 && p.pairs_[i - 1].first == s)
      throw std::invalid_argument("permutation maps id " + std::to_string(s) + " twice");
    targets.push_back(t);
    max_src = std::max(max_src, s);
  }
  std::sort(targets.begin(), targets.end());
  if (std::adjacent_find(targets.begin(), targets.end()) != targets.end())
    throw std::invalid_argument("permutation is not injective");
  p.lookup_.assign(max_src + 1, -1);
  for (auto [s, t] : p.pairs_) p.lookup_[s] = t;
  return p;
}

Permutation Permutation::identity(std::span<const VertexId> ids) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(ids.size());
  for (VertexId v : ids) pairs.emplace_back(v, v);
  return from_pairs(pairs);
}

bool Permutation::defined_at(VertexId v) const {
  return v >= 0 && v < static_cast<VertexId>(lookup_.size()) && lookup_[v] >= 0;
}

VertexId Permutation::apply(VertexId v) const {
  if (!defined_at(v))
    throw std::invalid_argument("permutation undefined at id " + std::to_string(v));
  return lookup_[v];
}

Permutation Permutation::inverse() const {
  std::vector<std::pair<VertexId, VertexId>> flipped;
  flipped.reserve(pairs_.size());
  for (auto [s, t] : pairs_) flipped.emplace_back(t, s);
  return from_pairs(flipped);
}

std::vector<VertexId> Permutation::domain() const {
  std::vector<VertexId> out;
  out.reserve(pairs_.size());
  for (auto [s, t] : pairs_) out.push_back(s);
  return out;
}

std::vector<VertexId> Permutation::codomain() const {
  std::vector<VertexId> out;
  out.reserve(pairs_.size());
  for (auto [s, t] : pairs_) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("graph capacity must be non-negative");
  std::vector<VertexId> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  return Graph::induced(n, ids, edges);
}

DegreeVector degree_vector(const Graph& g) {
  DegreeVector degrees;
  degrees.reserve(g.vertex_count());
  for (VertexId v : g.vertex_ids()) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

Graph remove_vertex(const Graph& g, VertexId v) {
  if (!g.has_vertex(v))
    throw std::invalid_argument("remove_vertex: unknown vertex id " + std::to_string(v));
  std::vector<VertexId> ids = g.vertex_ids();
  ids.erase(std::find(ids.begin(), ids.end(), v));
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (auto [a, b] : g.edges())
    if (a != v && b != v) kept.emplace_back(a, b);
  return Graph::induced(g.capacity(), ids, kept);
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  auto dom = p.domain();
  if (dom != g.vertex_ids())
    throw std::invalid_argument("apply_permutation: not a bijection on vertex_ids");
  std::vector<VertexId> new_ids = p.codomain();
  int cap = new_ids.empty() ? 0 : new_ids.back() + 1;
  std::vector<Edge> mapped;
  mapped.reserve(g.edge_count());
  for (auto [a, b] : g.edges()) mapped.emplace_back(p.apply(a), p.apply(b));
  return Graph::induced(cap, new_ids, mapped);
}

bool is_connected(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("is_connected: empty graph");
  VertexId start = g.min_vertex_id();
  std::vector<char> seen(g.capacity(), 0);
  std::queue<VertexId> frontier;
  seen[start] = 1;
  frontier.push(start);
  int reached = 1;
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop();
    for (VertexId u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace posiso
