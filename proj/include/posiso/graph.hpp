#pragma once

#include <span>
#include <utility>
#include <vector>

namespace posiso {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;

/// Sorted nondecreasing list of all vertex degrees.
using DegreeVector = std::vector<int>;

/// Undirected simple graph over stable non-negative integer vertex ids.
///
/// Ids survive vertex deletion unchanged (no renumbering), so a trace of
/// removed vertices stays meaningful across rounds. All ids are < capacity().
/// Values are immutable after construction and safe to share across threads.
class Graph {
public:
  Graph() = default;

  /// Single validated construction path used by every builder.
  /// `vertices` may be any duplicate-free subset of [0, capacity); edges must
  /// join two distinct listed vertices. Duplicate edges collapse to one.
  static Graph induced(int capacity, std::span<const VertexId> vertices,
                       std::span<const Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  bool empty() const { return vertex_count_ == 0; }
  int capacity() const { return static_cast<int>(present_.size()); }

  bool has_vertex(VertexId v) const {
    return v >= 0 && v < capacity() && present_[v];
  }
  bool has_edge(VertexId u, VertexId v) const;

  /// Neighbor ids in ascending order. Throws on unknown vertex.
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;

  std::vector<VertexId> vertex_ids() const;  // ascending
  VertexId min_vertex_id() const;            // throws on empty graph
  std::vector<Edge> edges() const;           // u < v, lexicographic

  /// Semantic equality: same vertex id set and same edge set.
  /// Trailing unused capacity is ignored.
  friend bool operator==(const Graph& a, const Graph& b);

private:
  std::vector<char> present_;
  std::vector<std::vector<VertexId>> adj_;
  int vertex_count_ = 0;
  int edge_count_ = 0;
};

/// Bijection between two equal-size sets of vertex ids.
class Permutation {
public:
  Permutation() = default;

  /// Validates injectivity on both columns. Throws std::invalid_argument.
  static Permutation from_pairs(std::span<const std::pair<VertexId, VertexId>> pairs);
  static Permutation from_pairs(std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    return from_pairs(std::span<const std::pair<VertexId, VertexId>>(pairs.begin(), pairs.size()));
  }
  static Permutation identity(std::span<const VertexId> ids);

  bool defined_at(VertexId v) const;
  VertexId apply(VertexId v) const;  // throws if undefined
  Permutation inverse() const;

  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }
  std::vector<VertexId> domain() const;    // sorted
  std::vector<VertexId> codomain() const;  // sorted

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::pair<VertexId, VertexId>> pairs_;  // sorted by source
  std::vector<VertexId> lookup_;                      // source -> target, -1 undefined
};

/// Builds a graph on vertices 0..n-1. Ids out of [0, n) and loops are errors;
/// duplicate edge pairs collapse silently.
Graph build_graph(int n, std::span<const Edge> edges);
inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

DegreeVector degree_vector(const Graph& g);

/// Induced subgraph on vertex_ids \ {v}; surviving ids unchanged.
Graph remove_vertex(const Graph& g, VertexId v);

/// Relabels g by p. Requires domain(p) = vertex_ids(g).
Graph apply_permutation(const Graph& g, const Permutation& p);

/// True iff g has a single connected component. Throws on the empty graph.
bool is_connected(const Graph& g);

}  // namespace posiso
