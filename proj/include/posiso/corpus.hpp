#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "posiso/graph.hpp"

namespace posiso {

/// 64-bit seed driving a deterministic pseudo-random stream. The generator
/// (mt19937_64) and every draw below are fully specified, so the same seed
/// reproduces the same corpus byte for byte on any platform.
using Seed = std::uint64_t;

/// Stream derivation for independent substreams (per trial, per rep).
Seed derive_seed(Seed base, std::uint64_t stream);

class Rng {
public:
  explicit Rng(Seed s) : gen_(s) {}
  std::uint64_t next() { return gen_(); }
  /// Uniform in [0,1), 53-bit resolution.
  double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound). Modulo bias is irrelevant here; determinism is
  /// the contract.
  std::uint64_t below(std::uint64_t bound) { return gen_() % bound; }

private:
  std::mt19937_64 gen_;
};

struct GraphPair {
  Graph left;
  Graph right;
  std::string provenance;               // "permuted", "independent-gnp", "named:<...>"
  std::optional<Permutation> hidden;    // the relabeling, for permuted pairs
};

/// G(n,p): each of the C(n,2) candidate edges included independently with
/// probability p. Errors on p outside [0,1] or n < 1.
Graph gen_gnp(int n, double p, Seed seed);
Graph gen_gnp(int n, double p, Rng& rng);

/// Resamples G(n,p) until connected; throws after 10000 attempts.
Graph gen_connected_gnp(int n, double p, Seed seed);
Graph gen_connected_gnp(int n, double p, Rng& rng);

Permutation random_permutation(std::span<const VertexId> ids, Rng& rng);

/// right = left relabeled by a hidden random permutation.
GraphPair gen_permuted_pair(const Graph& g, Seed seed);
GraphPair gen_permuted_pair(const Graph& g, Rng& rng);

/// Fixture lookup: the fixed graphs petersen, appendix_G, appendix_H,
/// rook_4x4, shrikhande plus the sized families path_<n>, cycle_<n> (n >= 3)
/// and complete_<n>. Errors on unknown names.
Graph named_graph(const std::string& name);

/// The fixed names above (sized families excluded).
std::vector<std::string> named_graph_catalog();

}  // namespace posiso
