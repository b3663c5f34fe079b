#pragma once

#include <optional>
#include <string>
#include <vector>

#include "posiso/corpus.hpp"

namespace posiso {

struct BenchConfig {
  std::vector<int> sizes;  // strictly increasing, each >= 4
  double p = 0.5;
  int reps = 5;
  Seed seed = 0;
  bool compare = false;  // also time the OpenMP candidate scan
};

struct BenchPoint {
  int n = 0;
  double median_ms = 0.0;                 // serial scan
  std::optional<double> parallel_ms;      // set when compare is on
};

struct BenchReport {
  std::vector<BenchPoint> points;
  std::optional<double> slope;  // log-log least squares over serial medians
};

/// Times decide_isomorphism on permuted connected G(n,p) pairs, one fresh
/// pair per rep, reporting the median per size. Instances depend only on
/// (seed, n, rep), so reruns measure identical inputs.
BenchReport run_bench(const BenchConfig& config);

/// Stable text form: one "bench n=..." line per size, then a slope line.
std::string bench_to_text(const BenchReport& report);

}  // namespace posiso
