#include "posiso/mining.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "posiso/formats.hpp"
#include "posiso/oracle.hpp"
#include "posiso/report.hpp"

namespace posiso {
namespace {

TrialResult run_one_trial(const MiningConfig& config, int trial) {
  TrialResult r;
  r.trial = trial;
  Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(trial)));
  int span = config.n_max - config.n_min + 1;
  int n = config.n_min + static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
  if (rng.unit() < 0.5) {
    Graph g = gen_connected_gnp(n, config.p, rng);
    GraphPair pair = gen_permuted_pair(g, rng);
    r.left = std::move(pair.left);
    r.right = std::move(pair.right);
    r.provenance = pair.provenance;
  } else {
    r.left = gen_connected_gnp(n, config.p, rng);
    r.right = gen_connected_gnp(n, config.p, rng);
    std::ostringstream prov;
    prov << "independent-gnp:" << n << ":" << config.p;
    r.provenance = prov.str();
  }
  return r;
}

TrialResult stress_trial(int trial) {
  TrialResult r;
  r.trial = trial;
  r.provenance = "named:rook_4x4,shrikhande";
  r.left = named_graph("rook_4x4");
  r.right = named_graph("shrikhande");
  return r;
}

void judge(TrialResult& r, ScanMode mode) {
  DecideOptions opts;
  opts.scan_mode = mode;
  DecisionResult decision = decide_isomorphism(r.left, r.right, opts);
  r.verdict = decision.verdict;
  r.trace = decision.trace;
  if (r.trace.complete()) {
    CandidateMapping mapping = extract_candidate_mapping(r.trace);
    r.mapping_verified = verify_mapping(r.left, r.right, mapping);
  }
  r.oracle_isomorphic = exact_isomorphism(r.left, r.right).isomorphic;
  if (r.left.vertex_count() <= 8 && r.left.vertex_count() == r.right.vertex_count()) {
    bool brute = exact_isomorphism_exhaustive(r.left, r.right).isomorphic;
    if (brute != r.oracle_isomorphic) {
      throw std::logic_error("oracle self-check failed on trial " + std::to_string(r.trial));
    }
  }
  bool heur = r.verdict.isomorphic();
  if (heur == r.oracle_isomorphic) {
    r.disposition = Disposition::Agreement;
  } else if (heur) {
    r.disposition = Disposition::FalseAccept;
  } else {
    r.disposition = Disposition::FalseReject;
  }
}

DisagreementRecord to_record(const TrialResult& r) {
  DisagreementRecord rec;
  rec.trial = r.trial;
  rec.provenance = r.provenance;
  rec.left_g6 = emit_graph6(r.left);
  rec.right_g6 = emit_graph6(r.right);
  rec.verdict = r.verdict;
  rec.trace = r.trace;
  rec.oracle_isomorphic = r.oracle_isomorphic;
  return rec;
}

void archive_disagreements(const MiningConfig& config, const MiningReport& report) {
  namespace fs = std::filesystem;
  fs::create_directories(config.out_dir);
  std::ofstream jsonl(config.out_dir / "disagreements.jsonl");
  if (!jsonl) {
    throw std::runtime_error("cannot write to output directory: " + config.out_dir.string());
  }
  auto dump = [&](const DisagreementRecord& rec) {
    char stem[32];
    std::snprintf(stem, sizeof stem, "trial_%05d", rec.trial);
    std::ofstream left(config.out_dir / (std::string(stem) + "_left.g6"));
    left << rec.left_g6 << '\n';
    std::ofstream right(config.out_dir / (std::string(stem) + "_right.g6"));
    right << rec.right_g6 << '\n';
    nlohmann::json j;
    j["trial"] = rec.trial;
    j["provenance"] = rec.provenance;
    j["left_g6"] = rec.left_g6;
    j["right_g6"] = rec.right_g6;
    j["heuristic"] = rec.verdict.isomorphic() ? "HEURISTIC_ISOMORPHIC"
                                              : "HEURISTIC_NOT_ISOMORPHIC";
    j["oracle"] = rec.oracle_isomorphic;
    auto stage = failure_stage_string(rec.verdict);
    if (stage) {
      j["failure_stage"] = *stage;
    } else {
      j["failure_stage"] = nullptr;
    }
    jsonl << j.dump() << '\n';
  };
  // jsonl rows in trial order: false accepts and rejects merged by trial id
  std::size_t a = 0, b = 0;
  while (a < report.false_accepts.size() || b < report.false_rejects.size()) {
    bool take_a = b >= report.false_rejects.size() ||
                  (a < report.false_accepts.size() &&
                   report.false_accepts[a].trial < report.false_rejects[b].trial);
    dump(take_a ? report.false_accepts[a++] : report.false_rejects[b++]);
  }
}

}  // namespace

MiningReport run_mining(const MiningConfig& config, std::vector<TrialResult>* details) {
  if (config.trials < 0) throw std::invalid_argument("trial count must be >= 0");
  if (config.n_min < 2 || config.n_max < config.n_min) {
    throw std::invalid_argument("need 2 <= n_min <= n_max");
  }
  if (!(config.p > 0.0) || !(config.p <= 1.0)) {
    throw std::invalid_argument("edge probability must be in (0, 1]");
  }

  int total = config.trials + (config.include_stress ? 1 : 0);
  std::vector<TrialResult> results(static_cast<std::size_t>(total));
  std::string first_error;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < total; ++t) {
    try {
      TrialResult r = (t < config.trials) ? run_one_trial(config, t) : stress_trial(t);
      judge(r, config.scan_mode);
      results[static_cast<std::size_t>(t)] = std::move(r);
    } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        if (first_error.empty()) first_error = e.what();
      }
    }
  }
  if (!first_error.empty()) throw std::runtime_error("mining trial failed: " + first_error);

  MiningReport report;
  report.trials = total;
  for (const TrialResult& r : results) {
    switch (r.disposition) {
      case Disposition::Agreement:
        ++report.agreements;
        break;
      case Disposition::FalseAccept:
        report.false_accepts.push_back(to_record(r));
        break;
      case Disposition::FalseReject:
        report.false_rejects.push_back(to_record(r));
        break;
    }
    if (r.verdict.failure &&
        r.verdict.failure->kind == FailureKind::DisconnectedIntermediate) {
      ++report.disconnected_intermediate_count;
    }
  }
  if (!config.out_dir.empty()) archive_disagreements(config, report);
  if (details) *details = std::move(results);
  return report;
}

std::string report_to_json(const MiningReport& report) {
  nlohmann::json j;
  j["trials"] = report.trials;
  j["agreements"] = report.agreements;
  j["false_accepts"] = report.false_accepts.size();
  j["false_rejects"] = report.false_rejects.size();
  j["disconnected_intermediate"] = report.disconnected_intermediate_count;
  return j.dump();
}

std::optional<std::string> failure_stage_string(const Verdict& v) {
  if (v.isomorphic() || !v.failure) return std::nullopt;
  const Failure& f = *v.failure;
  std::ostringstream out;
  switch (f.kind) {
    case FailureKind::Precheck:
      out << "precheck";
      break;
    case FailureKind::UnmatchedPivot:
      out << "round " << f.round << ": unmatched pivot "
          << vertex_label('v', f.pivot);
      break;
    case FailureKind::DisconnectedIntermediate:
      out << "round " << f.round << ": disconnected intermediate";
      break;
  }
  return out.str();
}

std::vector<ArchivedDisagreement> load_archive(const std::filesystem::path& dir) {
  std::ifstream jsonl(dir / "disagreements.jsonl");
  if (!jsonl) {
    throw std::runtime_error("no disagreements.jsonl in " + dir.string());
  }
  std::vector<ArchivedDisagreement> out;
  std::string line;
  while (std::getline(jsonl, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    ArchivedDisagreement d;
    d.trial = j.at("trial").get<int>();
    d.provenance = j.at("provenance").get<std::string>();
    d.left_g6 = j.at("left_g6").get<std::string>();
    d.right_g6 = j.at("right_g6").get<std::string>();
    d.heuristic = j.at("heuristic").get<std::string>();
    d.oracle_isomorphic = j.at("oracle").get<bool>();
    if (!j.at("failure_stage").is_null()) {
      d.failure_stage = j.at("failure_stage").get<std::string>();
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace posiso
