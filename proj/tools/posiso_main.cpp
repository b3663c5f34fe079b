#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "posiso/bench.hpp"
#include "posiso/corpus.hpp"
#include "posiso/formats.hpp"
#include "posiso/heuristic.hpp"
#include "posiso/mining.hpp"
#include "posiso/report.hpp"

namespace {

using namespace posiso;

Graph load(const std::string& path, const std::string& format_flag) {
  return read_graph_file(path, format_from_flag(format_flag, path));
}

int cmd_check(const std::string& left_path, const std::string& right_path,
              const std::string& format_flag, bool parallel) {
  Graph g = load(left_path, format_flag);
  Graph h = load(right_path, format_flag);
  DecideOptions opts;
  opts.scan_mode = parallel ? ScanMode::Parallel : ScanMode::Serial;
  DecisionResult result = decide_isomorphism(g, h, opts);
  std::printf("%s\n", verdict_line(result.verdict).c_str());
  if (result.trace.complete()) {
    CandidateMapping mapping = extract_candidate_mapping(result.trace);
    bool ok = verify_mapping(g, h, mapping);
    std::printf("candidate mapping verifies: %s\n", ok ? "yes" : "no");
  }
  return 0;
}

int cmd_trace(const std::string& left_path, const std::string& right_path,
              const std::string& format_flag) {
  Graph g = load(left_path, format_flag);
  Graph h = load(right_path, format_flag);
  TraceReport report = render_trace_report(g, h);
  std::fputs(report.text.c_str(), stdout);
  return 0;
}

int cmd_mine(int n_min, int n_max, double p, int trials, Seed seed,
             const std::string& out_dir, bool stress, bool parallel) {
  MiningConfig config;
  config.n_min = n_min;
  config.n_max = n_max;
  config.p = p;
  config.trials = trials;
  config.seed = seed;
  config.out_dir = out_dir;
  config.include_stress = stress;
  config.scan_mode = parallel ? ScanMode::Parallel : ScanMode::Serial;
  MiningReport report = run_mining(config);
  std::printf("%s\n", report_to_json(report).c_str());
  return 0;
}

int cmd_bench(const std::vector<int>& sizes, double p, int reps, Seed seed,
              bool compare) {
  BenchConfig config;
  config.sizes = sizes;
  config.p = p;
  config.reps = reps;
  config.seed = seed;
  config.compare = compare;
  BenchReport report = run_bench(config);
  std::fputs(bench_to_text(report).c_str(), stdout);
  return 0;
}

// spec is a catalog name ("petersen", "complete_3", "appendix_G", ...) or
// "gnp:<n>:<p>" for a random connected instance
Graph generate(const std::string& spec, Seed seed) {
  if (spec.rfind("gnp:", 0) == 0) {
    std::size_t colon = spec.find(':', 4);
    if (colon == std::string::npos) {
      throw std::invalid_argument("expected gnp:<n>:<p>, got: " + spec);
    }
    int n = std::stoi(spec.substr(4, colon - 4));
    double p = std::stod(spec.substr(colon + 1));
    return gen_connected_gnp(n, p, seed);
  }
  return named_graph(spec);
}

int cmd_gen(const std::string& spec, Seed seed, const std::string& out_path,
            const std::string& format_flag) {
  Graph g = generate(spec, seed);
  write_graph_file(out_path, g, format_from_flag(format_flag, out_path));
  return 0;
}

int cmd_convert(const std::string& in_path, const std::string& out_path,
                const std::string& in_format, const std::string& out_format) {
  Graph g = load(in_path, in_format);
  write_graph_file(out_path, g, format_from_flag(out_format, out_path));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positional-equivalence isomorphism toolkit"};
  app.require_subcommand(1);

  std::string left_path, right_path, format_flag = "auto";
  bool parallel = false;

  auto* check = app.add_subcommand("check", "decide a pair and print the verdict");
  check->add_option("left", left_path, "first graph file")->required();
  check->add_option("right", right_path, "second graph file")->required();
  check->add_option("--format", format_flag, "g6, edges, or auto (by extension)")
      ->default_str("auto");
  check->add_flag("--parallel", parallel, "use the OpenMP candidate scan");

  auto* trace = app.add_subcommand("trace", "print the full round-by-round report");
  trace->add_option("left", left_path, "first graph file")->required();
  trace->add_option("right", right_path, "second graph file")->required();
  trace->add_option("--format", format_flag, "g6, edges, or auto (by extension)")
      ->default_str("auto");

  int n_min = 5, n_max = 10, trials = 100, reps = 5;
  double p = 0.5;
  posiso::Seed seed = 1;
  std::string out_dir, out_path, in_format = "auto", out_format = "auto";
  bool stress = false, compare = false;
  std::vector<int> sizes;
  std::string gen_spec;

  auto* mine = app.add_subcommand("mine", "hunt heuristic/oracle disagreements");
  mine->add_option("--n-min", n_min, "smallest vertex count")->default_val(5);
  mine->add_option("--n-max", n_max, "largest vertex count")->default_val(10);
  mine->add_option("--p", p, "edge probability")->default_val(0.5);
  mine->add_option("--trials", trials, "number of random trials")->default_val(100);
  mine->add_option("--seed", seed, "base seed")->default_val(1);
  mine->add_option("--out", out_dir, "directory for disagreement archive");
  mine->add_flag("--stress", stress, "append the rook_4x4 / shrikhande trial");
  mine->add_flag("--parallel", parallel, "use the OpenMP candidate scan");

  auto* bench = app.add_subcommand("bench", "time the decision loop across sizes");
  bench->add_option("--sizes", sizes, "vertex counts, e.g. --sizes 20,40,80")
      ->delimiter(',')
      ->required();
  bench->add_option("--p", p, "edge probability")->default_val(0.5);
  bench->add_option("--reps", reps, "repetitions per size")->default_val(5);
  bench->add_option("--seed", seed, "base seed")->default_val(1);
  bench->add_flag("--compare", compare, "also time the OpenMP scan");

  auto* gen = app.add_subcommand("gen", "write a named or random graph to a file");
  gen->add_option("spec", gen_spec,
                  "catalog name (see README) or gnp:<n>:<p>")
      ->required();
  gen->add_option("--out", out_path, "output file")->required();
  gen->add_option("--seed", seed, "seed for random specs")->default_val(1);
  gen->add_option("--format", out_format, "g6, edges, or auto (by extension)")
      ->default_str("auto");

  auto* convert = app.add_subcommand("convert", "convert between graph6 and edge list");
  convert->add_option("input", left_path, "input graph file")->required();
  convert->add_option("output", out_path, "output graph file")->required();
  convert->add_option("--in-format", in_format, "g6, edges, or auto")
      ->default_str("auto");
  convert->add_option("--out-format", out_format, "g6, edges, or auto")
      ->default_str("auto");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(check)) {
      return cmd_check(left_path, right_path, format_flag, parallel);
    }
    if (app.got_subcommand(trace)) {
      return cmd_trace(left_path, right_path, format_flag);
    }
    if (app.got_subcommand(mine)) {
      return cmd_mine(n_min, n_max, p, trials, seed, out_dir, stress, parallel);
    }
    if (app.got_subcommand(bench)) {
      return cmd_bench(sizes, p, reps, seed, compare);
    }
    if (app.got_subcommand(gen)) {
      return cmd_gen(gen_spec, seed, out_path, out_format);
    }
    if (app.got_subcommand(convert)) {
      return cmd_convert(left_path, out_path, in_format, out_format);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
