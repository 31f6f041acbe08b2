#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mst/graph.hpp"

namespace mst {

enum class Algo { Seq, SeqOpt, Lock, Cas, Kruskal };

std::string to_string(Algo a);
std::optional<Algo> algo_from_string(std::string_view s);
bool algo_is_parallel(Algo a) noexcept;

struct GeneratorSpec {
  VertexId n = 0;
  int avg_degree = 0;
  std::uint64_t seed = 0;
};

/// One experiment description: a graph source, the algorithms to run, the
/// thread counts for the parallel ones, and how many timed trials per
/// configuration. Sequential algorithms ignore thread_counts.
struct BenchPlan {
  std::string graph_name;
  std::optional<GeneratorSpec> generator;  // exactly one of generator / graph_path
  std::string graph_path;
  std::vector<Algo> algorithms;
  std::vector<int> thread_counts{1};
  int repetitions = 5;
  bool verify = false;
  bool faithful_lock = false;
  int warmup_runs = 1;  // untimed runs per configuration
};

struct BenchRow {
  std::string graph_name;
  std::string algorithm;
  int threads = 1;
  int trial = 1;
  double elapsed_ms = 0.0;
  Weight mst_weight = 0;
  std::uint32_t rounds = 0;
  bool verified = false;
};

enum class BenchErrorKind { MissingBaseline, VerificationFailed, CsvParse };

class BenchError : public std::runtime_error {
 public:
  BenchError(BenchErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  BenchErrorKind kind() const noexcept { return kind_; }

 private:
  BenchErrorKind kind_;
};

/// Named workload presets (10K/100K/1M vertices x average degree 3/6/9),
/// each with a fixed seed so reports are reproducible.
const std::vector<std::pair<std::string, GeneratorSpec>>& preset_table();
std::optional<GeneratorSpec> find_preset(std::string_view name);

/// Builds the plan's graph (generator or file).
Graph materialize_graph(const BenchPlan& plan);

/// Runs the plan: per configuration one warm-up plus `repetitions` timed
/// trials, one row each. With plan.verify the Kruskal oracle is computed once
/// per graph and every result is checked against it; any failure throws
/// BenchError{VerificationFailed}. Also enforces that mst_weight is identical
/// across all rows. Progress lines go to *progress when non-null.
std::vector<BenchRow> run_bench(const BenchPlan& plan, std::ostream* progress = nullptr);

/// CSV: header "graph,algorithm,threads,trial,elapsed_ms,mst_weight,rounds,verified",
/// one row per trial, weights as unsigned decimal, elapsed_ms with
/// round-trip-exact formatting, verified as 0/1.
void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);
void write_csv_file(const std::vector<BenchRow>& rows, const std::string& path);
std::vector<BenchRow> read_csv(std::istream& in);
std::vector<BenchRow> read_csv_file(const std::string& path);

/// Per (graph, parallel algorithm, T): median-based speedups over the
/// sequential baselines, plus the lock-vs-cas ratio where both exist.
/// Ratios that cannot be computed are NaN.
struct SpeedupRow {
  std::string graph;
  std::string algorithm;
  int threads = 1;
  double vs_seq = 0.0;
  double vs_seq_opt = 0.0;
  double cas_vs_lock = 0.0;
};

struct SpeedupSummary {
  std::vector<SpeedupRow> rows;
  // Headline maxima, mirroring the usual report form:
  // lock vs seq, lock vs seq-opt, cas vs seq, cas vs seq-opt, cas vs lock.
  double lock_vs_seq_max = 0.0;
  double lock_vs_seq_opt_max = 0.0;
  double cas_vs_seq_max = 0.0;
  double cas_vs_seq_opt_max = 0.0;
  double cas_vs_lock_max = 0.0;
};

/// Throws BenchError{MissingBaseline} if a graph has parallel rows but no
/// sequential baseline rows at all.
SpeedupSummary summarize_speedups(const std::vector<BenchRow>& rows);
void print_speedup_table(const SpeedupSummary& summary, std::ostream& out);

double median(std::vector<double> values);

}  // namespace mst
