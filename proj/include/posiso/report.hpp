#pragma once

#include <optional>
#include <string>

#include "posiso/heuristic.hpp"

namespace posiso {

/// Display label for a vertex: left-graph ids print as v1..vn, right-graph
/// ids as u1..un, 1-based (id 0 is v1).
std::string vertex_label(char side, VertexId id);

/// "I_v4=(1,1,1,1) O_v4=()"
std::string characteristic_line(char side, VertexId id, const Characteristic& c);

/// "HEURISTIC_ISOMORPHIC" or "HEURISTIC_NOT_ISOMORPHIC (<stage>)".
std::string verdict_line(const Verdict& v);

struct TraceReport {
  std::string text;
  DecisionResult result;
  std::optional<bool> mapping_verified;  // set when the trace is complete
};

/// Round-by-round report: per round the pivot, its digraph's level sets and
/// characteristics table, the matched candidate and its table, and the
/// removed pair. Stable text layout; byte-identical across runs.
TraceReport render_trace_report(const Graph& g, const Graph& h, DecideOptions opts = {});

}  // namespace posiso
