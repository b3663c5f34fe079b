#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "posiso/graph.hpp"
#include "posiso/positioning.hpp"

namespace posiso {

enum class Outcome { HeuristicIsomorphic, HeuristicNotIsomorphic };

enum class FailureKind { Precheck, UnmatchedPivot, DisconnectedIntermediate };

struct Failure {
  FailureKind kind = FailureKind::Precheck;
  int round = 0;         // 1-based; 0 for precheck failures
  VertexId pivot = -1;   // the unmatched pivot, when kind is UnmatchedPivot

  friend bool operator==(const Failure&, const Failure&) = default;
};

/// The verdict is heuristic: the removal loop can mispair vertices, so its
/// answer is a claim to be checked against an exact oracle, not ground truth.
struct Verdict {
  Outcome outcome = Outcome::HeuristicNotIsomorphic;
  std::optional<Failure> failure;  // present iff not isomorphic

  bool isomorphic() const { return outcome == Outcome::HeuristicIsomorphic; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Ordered list of (left id, right id) pairs removed per round.
struct RemovalTrace {
  int input_vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> rounds;

  bool complete() const {
    return static_cast<int>(rounds.size()) == input_vertex_count;
  }
  friend bool operator==(const RemovalTrace&, const RemovalTrace&) = default;
};

struct DecisionResult {
  Verdict verdict;
  RemovalTrace trace;

  friend bool operator==(const DecisionResult&, const DecisionResult&) = default;
};

/// Serial is the reference candidate-scan path; Parallel chunks the scan
/// across OpenMP threads and must return identical results.
enum class ScanMode { Serial, Parallel };

struct DecideOptions {
  ScanMode scan_mode = ScanMode::Serial;
};

/// Snapshot of one removal round, handed to an observer before the round's
/// vertices are removed. `matched` is empty when no candidate fit.
struct RoundView {
  int round = 0;  // 1-based
  const Graph& left;
  const Graph& right;
  VertexId pivot = -1;
  std::optional<VertexId> matched;
  const AuxiliaryDigraph& pivot_digraph;
};

using RoundObserver = std::function<void(const RoundView&)>;

/// Vertex/edge counts and degree vectors match. Requires both graphs
/// connected and nonempty (throws otherwise).
bool precheck(const Graph& g, const Graph& h);

/// The removal loop. Each round pivots on the lowest surviving id in the
/// left graph, scans the right graph's survivors in ascending id for the
/// first one spawning a positionally equivalent digraph, and removes the
/// matched pair. A round with no match, or a disconnected intermediate
/// subgraph, stops the loop with a heuristic rejection.
/// Throws on empty or disconnected initial inputs.
DecisionResult decide_isomorphism(const Graph& g, const Graph& h,
                                  DecideOptions opts = {},
                                  const RoundObserver& observer = {});

/// Lowest-id vertex of s whose auxiliary digraph matches the pivot profile.
std::optional<VertexId> find_first_match(const Graph& s, const LevelProfile& pivot_profile,
                                         ScanMode mode);

/// A complete removal trace read as a vertex correspondence left -> right.
/// Injective by construction; being a genuine isomorphism is not guaranteed.
struct CandidateMapping {
  std::vector<std::pair<VertexId, VertexId>> pairs;  // sorted by source

  Permutation as_permutation() const { return Permutation::from_pairs(pairs); }
  friend bool operator==(const CandidateMapping&, const CandidateMapping&) = default;
};

/// Errors on an incomplete trace.
CandidateMapping extract_candidate_mapping(const RemovalTrace& trace);

/// True iff m maps every edge of g onto an edge of h and the edge counts are
/// equal (which together force the converse direction). Requires m to be a
/// bijection from g's vertices into h's (throws otherwise).
bool verify_mapping(const Graph& g, const Graph& h, const Permutation& m);
bool verify_mapping(const Graph& g, const Graph& h, const CandidateMapping& m);

}  // namespace posiso
