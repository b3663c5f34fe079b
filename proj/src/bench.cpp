#include "posiso/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "posiso/heuristic.hpp"

namespace posiso {
namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return xs[n / 2];
  return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double time_decide_ms(const Graph& g, const Graph& h, ScanMode mode) {
  DecideOptions opts;
  opts.scan_mode = mode;
  auto start = std::chrono::steady_clock::now();
  DecisionResult result = decide_isomorphism(g, h, opts);
  auto stop = std::chrono::steady_clock::now();
  // keep the call from being optimized out
  volatile bool sink = result.verdict.isomorphic();
  (void)sink;
  double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return std::max(ms, 1e-6);
}

// least-squares slope of log(median) against log(n)
double fit_slope(const std::vector<BenchPoint>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  auto k = static_cast<double>(points.size());
  for (const BenchPoint& pt : points) {
    double x = std::log(static_cast<double>(pt.n));
    double y = std::log(pt.median_ms);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("need at least one size");
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    if (config.sizes[i] < 4) throw std::invalid_argument("sizes must be >= 4");
    if (i > 0 && config.sizes[i] <= config.sizes[i - 1]) {
      throw std::invalid_argument("sizes must be strictly increasing");
    }
  }
  if (config.reps < 1) throw std::invalid_argument("reps must be >= 1");
  if (!(config.p > 0.0) || !(config.p <= 1.0)) {
    throw std::invalid_argument("edge probability must be in (0, 1]");
  }

  BenchReport report;
  for (int n : config.sizes) {
    std::vector<double> serial_ms, parallel_ms;
    for (int rep = 0; rep < config.reps; ++rep) {
      Rng rng(derive_seed(derive_seed(config.seed, static_cast<std::uint64_t>(n)),
                          static_cast<std::uint64_t>(rep)));
      Graph g = gen_connected_gnp(n, config.p, rng);
      GraphPair pair = gen_permuted_pair(g, rng);
      serial_ms.push_back(time_decide_ms(pair.left, pair.right, ScanMode::Serial));
      if (config.compare) {
        parallel_ms.push_back(time_decide_ms(pair.left, pair.right, ScanMode::Parallel));
      }
    }
    BenchPoint pt;
    pt.n = n;
    pt.median_ms = median(serial_ms);
    if (config.compare) pt.parallel_ms = median(parallel_ms);
    report.points.push_back(pt);
  }
  if (report.points.size() >= 2) report.slope = fit_slope(report.points);
  return report;
}

std::string bench_to_text(const BenchReport& report) {
  std::ostringstream out;
  char buf[128];
  for (const BenchPoint& pt : report.points) {
    std::snprintf(buf, sizeof buf, "bench n=%d median_ms=%.6f", pt.n, pt.median_ms);
    out << buf;
    if (pt.parallel_ms) {
      std::snprintf(buf, sizeof buf, " parallel_ms=%.6f speedup=%.2f", *pt.parallel_ms,
                    pt.median_ms / *pt.parallel_ms);
      out << buf;
    }
    out << '\n';
  }
  if (report.slope) {
    std::snprintf(buf, sizeof buf, "slope=%.3f", *report.slope);
    out << buf << '\n';
  } else {
    out << "slope=undefined (need at least 2 sizes)\n";
  }
  return out.str();
}

}  // namespace posiso
