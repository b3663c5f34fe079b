#pragma once

#include <optional>

#include "posiso/graph.hpp"

namespace posiso {

struct OracleResult {
  bool isomorphic = false;
  std::optional<Permutation> witness;  // present iff isomorphic
};

/// Exact isomorphism decision by backtracking vertex assignment, pruned by
/// degree and consistency with already-mapped neighborhoods. Exhaustive, so
/// correct for all inputs; practical for n up to roughly 40 on the corpora
/// used here. Requires equal vertex counts (throws otherwise).
OracleResult exact_isomorphism(const Graph& g, const Graph& h);

/// Reference decision enumerating all n! bijections; validates the
/// backtracker. Capped at n <= 10.
OracleResult exact_isomorphism_exhaustive(const Graph& g, const Graph& h);

}  // namespace posiso
