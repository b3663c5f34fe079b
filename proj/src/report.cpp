#include "posiso/report.hpp"

#include <sstream>

namespace posiso {

namespace {

std::string level_list(const std::vector<int>& levels) {
  std::string out = "(";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(levels[i]);
  }
  return out + ")";
}

void append_digraph_block(std::ostringstream& out, char side, const AuxiliaryDigraph& d,
                          const std::string& indent) {
  out << indent << "levels:";
  for (const auto& level : d.decomposition().levels) {
    out << " {";
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i) out << ",";
      out << vertex_label(side, level[i]);
    }
    out << "}";
  }
  out << "\n";
  for (const auto& [v, c] : d.characteristics())
    out << indent << characteristic_line(side, v, c) << "\n";
}

}  // namespace

std::string vertex_label(char side, VertexId id) {
  return std::string(1, side) + std::to_string(id + 1);
}

std::string characteristic_line(char side, VertexId id, const Characteristic& c) {
  const std::string name = vertex_label(side, id);
  return "I_" + name + "=" + level_list(c.in_levels) + " O_" + name + "=" +
         level_list(c.out_levels);
}

std::string verdict_line(const Verdict& v) {
  if (v.isomorphic()) return "HEURISTIC_ISOMORPHIC";
  std::string out = "HEURISTIC_NOT_ISOMORPHIC";
  if (!v.failure) return out;
  switch (v.failure->kind) {
    case FailureKind::Precheck:
      out += " (precheck)";
      break;
    case FailureKind::UnmatchedPivot:
      out += " (round " + std::to_string(v.failure->round) + ": unmatched pivot " +
             vertex_label('v', v.failure->pivot) + ")";
      break;
    case FailureKind::DisconnectedIntermediate:
      out += " (round " + std::to_string(v.failure->round) + ": disconnected intermediate)";
      break;
  }
  return out;
}

TraceReport render_trace_report(const Graph& g, const Graph& h, DecideOptions opts) {
  std::ostringstream out;
  TraceReport report;

  RoundObserver observer = [&](const RoundView& view) {
    out << "round " << view.round << "\n";
    out << "  pivot " << vertex_label('v', view.pivot) << "\n";
    out << "  left digraph rooted at " << vertex_label('v', view.pivot) << "\n";
    append_digraph_block(out, 'v', view.pivot_digraph, "    ");
    if (view.matched) {
      out << "  right digraph rooted at " << vertex_label('u', *view.matched) << "\n";
      append_digraph_block(out, 'u', build_auxiliary_digraph(view.right, *view.matched), "    ");
      out << "  removed " << vertex_label('v', view.pivot) << " <-> "
          << vertex_label('u', *view.matched) << "\n";
    } else {
      out << "  no candidate matched\n";
    }
  };

  report.result = decide_isomorphism(g, h, opts, observer);

  if (report.result.verdict.failure &&
      report.result.verdict.failure->kind == FailureKind::DisconnectedIntermediate) {
    out << "round " << report.result.verdict.failure->round << "\n";
    out << "  intermediate subgraph disconnected\n";
  }

  out << "verdict: " << verdict_line(report.result.verdict) << "\n";
  if (report.result.trace.complete()) {
    out << "removal order:";
    for (auto [v, u] : report.result.trace.rounds)
      out << " (" << vertex_label('v', v) << "," << vertex_label('u', u) << ")";
    out << "\n";
    const CandidateMapping mapping = extract_candidate_mapping(report.result.trace);
    report.mapping_verified = verify_mapping(g, h, mapping);
    out << "candidate mapping verifies: " << (*report.mapping_verified ? "yes" : "no") << "\n";
  }

  report.text = out.str();
  return report;
}

}  // namespace posiso
