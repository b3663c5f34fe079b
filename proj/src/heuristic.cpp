#include "posiso/heuristic.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posiso {

namespace {

void require_decidable(const Graph& g, const char* side) {
  if (g.empty())
    throw std::invalid_argument(std::string("decide_isomorphism: ") + side + " graph is empty");
  if (!is_connected(g))
    throw std::invalid_argument(std::string("decide_isomorphism: ") + side +
                                " graph is disconnected");
}

bool counts_match(const Graph& g, const Graph& h) {
  return g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count() &&
         degree_vector(g) == degree_vector(h);
}

std::optional<VertexId> scan_serial(const Graph& s, const LevelProfile& pivot_profile) {
  for (VertexId u : s.vertex_ids()) {
    if (build_auxiliary_digraph(s, u).level_profile() == pivot_profile) return u;
  }
  return std::nullopt;
}

std::optional<VertexId> scan_parallel(const Graph& s, const LevelProfile& pivot_profile) {
#ifdef _OPENMP
  const std::vector<VertexId> ids = s.vertex_ids();
  const int total = static_cast<int>(ids.size());
  const int chunk = std::max(16, 2 * omp_get_max_threads());
  for (int base = 0; base < total; base += chunk) {
    const int end = std::min(base + chunk, total);
    int found = total;  // index into ids, total = no match
#pragma omp parallel for schedule(dynamic) reduction(min : found)
    for (int k = base; k < end; ++k) {
      if (build_auxiliary_digraph(s, ids[k]).level_profile() == pivot_profile)
        found = std::min(found, k);
    }
    // Lowest index in the first matching chunk is the global lowest.
    if (found < total) return ids[found];
  }
  return std::nullopt;
#else
  return scan_serial(s, pivot_profile);
#endif
}

}  // namespace

bool precheck(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty())
    throw std::invalid_argument("precheck: empty input graph");
  if (!is_connected(g) || !is_connected(h))
    throw std::invalid_argument("precheck: disconnected input graph");
  return counts_match(g, h);
}

std::optional<VertexId> find_first_match(const Graph& s, const LevelProfile& pivot_profile,
                                         ScanMode mode) {
  return mode == ScanMode::Parallel ? scan_parallel(s, pivot_profile)
                                    : scan_serial(s, pivot_profile);
}

DecisionResult decide_isomorphism(const Graph& g, const Graph& h, DecideOptions opts,
                                  const RoundObserver& observer) {
  require_decidable(g, "left");
  require_decidable(h, "right");

  DecisionResult result;
  result.trace.input_vertex_count = g.vertex_count();
  if (!counts_match(g, h)) {
    result.verdict = {Outcome::HeuristicNotIsomorphic, Failure{FailureKind::Precheck, 0, -1}};
    return result;
  }

  Graph q = g;
  Graph s = h;
  int round = 0;
  while (!q.empty()) {
    ++round;
    // Removals can disconnect a subgraph; the level decomposition is only
    // defined on connected graphs, so such a round is a heuristic rejection.
    if (round > 1 && (!is_connected(q) || !is_connected(s))) {
      result.verdict = {Outcome::HeuristicNotIsomorphic,
                        Failure{FailureKind::DisconnectedIntermediate, round, -1}};
      return result;
    }
    VertexId pivot = q.min_vertex_id();
    AuxiliaryDigraph pivot_digraph = build_auxiliary_digraph(q, pivot);
    std::optional<VertexId> matched =
        find_first_match(s, pivot_digraph.level_profile(), opts.scan_mode);
    if (observer) observer(RoundView{round, q, s, pivot, matched, pivot_digraph});
    if (!matched) {
      result.verdict = {Outcome::HeuristicNotIsomorphic,
                        Failure{FailureKind::UnmatchedPivot, round, pivot}};
      return result;
    }
    result.trace.rounds.emplace_back(pivot, *matched);
    q = remove_vertex(q, pivot);
    s = remove_vertex(s, *matched);
  }
  result.verdict = {Outcome::HeuristicIsomorphic, std::nullopt};
  return result;
}

CandidateMapping extract_candidate_mapping(const RemovalTrace& trace) {
  if (!trace.complete())
    throw std::invalid_argument("extract_candidate_mapping: trace is incomplete (" +
                                std::to_string(trace.rounds.size()) + " of " +
                                std::to_string(trace.input_vertex_count) + " rounds)");
  CandidateMapping m;
  m.pairs = trace.rounds;
  std::sort(m.pairs.begin(), m.pairs.end());
  m.as_permutation();  // validates injectivity
  return m;
}

bool verify_mapping(const Graph& g, const Graph& h, const Permutation& m) {
  if (g.vertex_count() != h.vertex_count())
    throw std::invalid_argument("verify_mapping: vertex counts differ");
  if (m.domain() != g.vertex_ids())
    throw std::invalid_argument("verify_mapping: mapping is not total on the left graph");
  auto targets = m.codomain();
  auto h_ids = h.vertex_ids();
  if (!std::includes(h_ids.begin(), h_ids.end(), targets.begin(), targets.end()))
    throw std::invalid_argument("verify_mapping: mapping leaves the right graph");
  if (g.edge_count() != h.edge_count()) return false;
  for (auto [a, b] : g.edges())
    if (!h.has_edge(m.apply(a), m.apply(b))) return false;
  return true;
}

bool verify_mapping(const Graph& g, const Graph& h, const CandidateMapping& m) {
  return verify_mapping(g, h, m.as_permutation());
}

}  // namespace posiso
