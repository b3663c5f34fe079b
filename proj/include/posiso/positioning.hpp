#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "posiso/graph.hpp"

namespace posiso {

/// Partition of a connected graph's vertices into BFS distance classes from
/// a root: levels[k] holds exactly the vertices at shortest-path distance k.
struct LevelDecomposition {
  VertexId root = -1;
  std::vector<std::vector<VertexId>> levels;  // each sorted ascending
  std::vector<int> level_by_id;               // -1 for absent ids

  int level_of(VertexId v) const;  // throws on unknown vertex
  int level_count() const { return static_cast<int>(levels.size()); }
};

/// Position of a vertex inside an auxiliary digraph: the sorted multisets of
/// level numbers of arc sources into it (input) and arc targets out of it
/// (output).
struct Characteristic {
  std::vector<int> in_levels;
  std::vector<int> out_levels;

  // Lexicographic, input compared first. Needed only so multisets of
  // characteristics can be sorted deterministically.
  friend auto operator<=>(const Characteristic&, const Characteristic&) = default;
};

using Arc = std::pair<VertexId, VertexId>;

/// Per level: the sorted multiset of characteristics held by that level's
/// vertices. Two digraphs are positionally equivalent iff their profiles
/// compare equal.
using LevelProfile = std::vector<std::vector<Characteristic>>;

/// Layered directed graph spawned by a root vertex. Each graph edge between
/// consecutive levels becomes one arc from the lower level to the higher;
/// each same-level edge becomes two opposite arcs. Characteristics and the
/// level profile are derived from the arcs at construction time.
class AuxiliaryDigraph {
public:
  const LevelDecomposition& decomposition() const { return decomposition_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int level_count() const { return decomposition_.level_count(); }

  const Characteristic& characteristic_of(VertexId v) const;  // throws on unknown
  const std::vector<std::pair<VertexId, Characteristic>>& characteristics() const {
    return characteristics_;
  }
  const LevelProfile& level_profile() const { return profile_; }

private:
  friend AuxiliaryDigraph build_auxiliary_digraph(const Graph& g, VertexId root);

  LevelDecomposition decomposition_;
  std::vector<Arc> arcs_;                                           // sorted
  std::vector<std::pair<VertexId, Characteristic>> characteristics_;  // by id
  LevelProfile profile_;
};

/// BFS distance classes from root. Errors on a disconnected graph (some
/// vertex unreachable) or an unknown root.
LevelDecomposition compute_levels(const Graph& g, VertexId root);

AuxiliaryDigraph build_auxiliary_digraph(const Graph& g, VertexId root);

/// The digraph's characteristics as an id-ascending map.
std::vector<std::pair<VertexId, Characteristic>> vertex_characteristics(
    const AuxiliaryDigraph& d);

/// True iff both digraphs have the same number of levels and, level by
/// level, equal multisets of characteristics.
bool positional_equivalence(const AuxiliaryDigraph& a, const AuxiliaryDigraph& b);

/// Vertices whose characteristic pair occurs exactly once across the whole
/// digraph, ascending.
std::vector<VertexId> unique_vertices(const AuxiliaryDigraph& d);

}  // namespace posiso
