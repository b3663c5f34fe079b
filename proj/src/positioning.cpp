#include "posiso/positioning.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace posiso {

int LevelDecomposition::level_of(VertexId v) const {
  if (v < 0 || v >= static_cast<VertexId>(level_by_id.size()) || level_by_id[v] < 0)
    throw std::invalid_argument("level_of: unknown vertex id " + std::to_string(v));
  return level_by_id[v];
}

LevelDecomposition compute_levels(const Graph& g, VertexId root) {
  if (!g.has_vertex(root))
    throw std::invalid_argument("compute_levels: unknown root id " + std::to_string(root));
  LevelDecomposition d;
  d.root = root;
  d.level_by_id.assign(g.capacity(), -1);
  d.level_by_id[root] = 0;
  d.levels.push_back({root});
  std::queue<VertexId> frontier;
  frontier.push(root);
  int reached = 1;
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop();
    int next = d.level_by_id[v] + 1;
    for (VertexId u : g.neighbors(v)) {
      if (d.level_by_id[u] >= 0) continue;
      d.level_by_id[u] = next;
      if (next == d.level_count()) d.levels.emplace_back();
      d.levels[next].push_back(u);
      ++reached;
      frontier.push(u);
    }
  }
  if (reached != g.vertex_count())
    throw std::invalid_argument("compute_levels: graph is disconnected");
  // BFS pushes in ascending neighbor order but interleaves parents, so each
  // level still needs a sort.
  for (auto& level : d.levels) std::sort(level.begin(), level.end());
  return d;
}

const Characteristic& AuxiliaryDigraph::characteristic_of(VertexId v) const {
  auto it = std::lower_bound(characteristics_.begin(), characteristics_.end(), v,
                             [](const auto& entry, VertexId id) { return entry.first < id; });
  if (it == characteristics_.end() || it->first != v)
    throw std::invalid_argument("characteristic_of: unknown vertex id " + std::to_string(v));
  return it->second;
}

AuxiliaryDigraph build_auxiliary_digraph(const Graph& g, VertexId root) {
  AuxiliaryDigraph d;
  d.decomposition_ = compute_levels(g, root);
  const auto& level_of = d.decomposition_.level_by_id;

  // An arc (v,u) exists when level(u) = level(v)+1, and both (v,u) and (u,v)
  // when the levels coincide. Emitting (v,u) whenever level(u) >= level(v)
  // covers both cases, with the opposite same-level arc produced at u's turn.
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.has_vertex(v)) continue;
    for (VertexId u : g.neighbors(v))
      if (level_of[u] >= level_of[v]) d.arcs_.emplace_back(v, u);
  }

  std::vector<Characteristic> by_id(g.capacity());
  for (auto [src, dst] : d.arcs_) {
    by_id[dst].in_levels.push_back(level_of[src]);
    by_id[src].out_levels.push_back(level_of[dst]);
  }
  for (VertexId v = 0; v < g.capacity(); ++v) {
    if (!g.has_vertex(v)) continue;
    auto& c = by_id[v];
    std::sort(c.in_levels.begin(), c.in_levels.end());
    std::sort(c.out_levels.begin(), c.out_levels.end());
    d.characteristics_.emplace_back(v, std::move(c));
  }

  d.profile_.resize(d.level_count());
  for (const auto& [v, c] : d.characteristics_)
    d.profile_[level_of[v]].push_back(c);
  for (auto& bucket : d.profile_) std::sort(bucket.begin(), bucket.end());
  return d;
}

std::vector<std::pair<VertexId, Characteristic>> vertex_characteristics(
    const AuxiliaryDigraph& d) {
  return d.characteristics();
}

bool positional_equivalence(const AuxiliaryDigraph& a, const AuxiliaryDigraph& b) {
  return a.level_profile() == b.level_profile();
}

std::vector<VertexId> unique_vertices(const AuxiliaryDigraph& d) {
  const auto& entries = d.characteristics();
  std::vector<VertexId> out;
  for (const auto& [v, c] : entries) {
    int count = 0;
    for (const auto& [u, other] : entries)
      if (other == c) ++count;
    if (count == 1) out.push_back(v);
  }
  return out;
}

}  // namespace posiso
