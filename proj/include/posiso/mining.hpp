#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "posiso/corpus.hpp"
#include "posiso/heuristic.hpp"

namespace posiso {

struct MiningConfig {
  int n_min = 5;
  int n_max = 10;
  double p = 0.5;
  int trials = 0;
  Seed seed = 0;
  std::filesystem::path out_dir;  // empty: no archive written
  bool include_stress = false;    // append the forced rook_4x4 / shrikhande trial
  ScanMode scan_mode = ScanMode::Serial;
};

enum class Disposition { Agreement, FalseAccept, FalseReject };

struct TrialResult {
  int trial = 0;
  std::string provenance;
  Graph left;
  Graph right;
  Verdict verdict;
  RemovalTrace trace;
  std::optional<bool> mapping_verified;  // set when the trace is complete
  bool oracle_isomorphic = false;
  Disposition disposition = Disposition::Agreement;
};

struct DisagreementRecord {
  int trial = 0;
  std::string provenance;
  std::string left_g6;
  std::string right_g6;
  Verdict verdict;
  RemovalTrace trace;
  bool oracle_isomorphic = false;
};

struct MiningReport {
  int trials = 0;
  int agreements = 0;
  std::vector<DisagreementRecord> false_accepts;
  std::vector<DisagreementRecord> false_rejects;
  int disconnected_intermediate_count = 0;
};

/// Runs `trials` seeded trials (each draws a permuted pair or an independent
/// connected G(n,p) pair, 50/50), compares the heuristic against the exact
/// oracle, and tallies. Trials run in parallel when OpenMP is enabled; each
/// trial derives its own seed from (seed, trial index), so the report and
/// archive are byte-identical regardless of thread count.
///
/// When out_dir is set, every disagreement is archived as a pair of graph6
/// files plus one JSON record line in disagreements.jsonl.
MiningReport run_mining(const MiningConfig& config,
                        std::vector<TrialResult>* details = nullptr);

/// One-line machine-readable summary.
std::string report_to_json(const MiningReport& report);

/// "precheck", "round 3: unmatched pivot v5", "round 2: disconnected
/// intermediate"; empty for isomorphic verdicts.
std::optional<std::string> failure_stage_string(const Verdict& v);

struct ArchivedDisagreement {
  int trial = 0;
  std::string provenance;
  std::string left_g6;
  std::string right_g6;
  std::string heuristic;
  bool oracle_isomorphic = false;
  std::optional<std::string> failure_stage;
};

/// Reads back <dir>/disagreements.jsonl.
std::vector<ArchivedDisagreement> load_archive(const std::filesystem::path& dir);

}  // namespace posiso
