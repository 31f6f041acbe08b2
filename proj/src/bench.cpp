#include "mst/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "mst/boruvka_parallel.hpp"
#include "mst/boruvka_seq.hpp"
#include "mst/verify.hpp"

namespace mst {

std::string to_string(Algo a) {
  switch (a) {
    case Algo::Seq: return "seq";
    case Algo::SeqOpt: return "seq-opt";
    case Algo::Lock: return "lock";
    case Algo::Cas: return "cas";
    case Algo::Kruskal: return "kruskal";
  }
  return "?";
}

std::optional<Algo> algo_from_string(std::string_view s) {
  if (s == "seq") return Algo::Seq;
  if (s == "seq-opt") return Algo::SeqOpt;
  if (s == "lock") return Algo::Lock;
  if (s == "cas") return Algo::Cas;
  if (s == "kruskal") return Algo::Kruskal;
  return std::nullopt;
}

bool algo_is_parallel(Algo a) noexcept { return a == Algo::Lock || a == Algo::Cas; }

const std::vector<std::pair<std::string, GeneratorSpec>>& preset_table() {
  static const std::vector<std::pair<std::string, GeneratorSpec>> table = {
      {"Graph10K_3", {10'000, 3, 103}},    {"Graph10K_6", {10'000, 6, 106}},
      {"Graph10K_9", {10'000, 9, 109}},    {"Graph100K_3", {100'000, 3, 1003}},
      {"Graph100K_6", {100'000, 6, 1006}}, {"Graph100K_9", {100'000, 9, 1009}},
      {"Graph1M_3", {1'000'000, 3, 10003}}, {"Graph1M_6", {1'000'000, 6, 10006}},
      {"Graph1M_9", {1'000'000, 9, 10009}},
  };
  return table;
}

std::optional<GeneratorSpec> find_preset(std::string_view name) {
  for (const auto& [nm, spec] : preset_table())
    if (nm == name) return spec;
  return std::nullopt;
}

Graph materialize_graph(const BenchPlan& plan) {
  if (plan.generator) {
    const GeneratorSpec& s = *plan.generator;
    return generate_graph(s.n, s.avg_degree, s.seed);
  }
  return load_graph(plan.graph_path);
}

double median(std::vector<double> values) {
  if (values.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(values.begin(), values.end());
  const std::size_t h = values.size() / 2;
  if (values.size() % 2 == 1) return values[h];
  return (values[h - 1] + values[h]) / 2.0;
}

namespace {

MstResult run_algo(Algo a, Graph& g, int threads, bool faithful_lock) {
  switch (a) {
    case Algo::Seq: return boruvka_seq(g);
    case Algo::SeqOpt: return boruvka_seq_opt(g);
    case Algo::Lock: return boruvka_lock(g, threads, ParallelOptions{faithful_lock});
    case Algo::Cas: return boruvka_cas(g, threads);
    case Algo::Kruskal: return kruskal_oracle(g);
  }
  throw std::logic_error("unreachable algo");
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchPlan& plan, std::ostream* progress) {
  if (plan.repetitions < 1) throw std::invalid_argument("run_bench: repetitions >= 1");
  if (plan.algorithms.empty()) throw std::invalid_argument("run_bench: no algorithms");
  if (plan.thread_counts.empty()) throw std::invalid_argument("run_bench: no thread counts");

  Graph g = materialize_graph(plan);

  std::optional<MstResult> oracle;
  if (plan.verify) {
    oracle = kruskal_oracle(g);
    if (progress)
      *progress << "# oracle computed once for " << plan.graph_name
                << " and reused for all verifications (weight " << oracle->total_weight << ")\n";
  }

  std::vector<BenchRow> rows;
  for (Algo a : plan.algorithms) {
    const std::vector<int> ts = algo_is_parallel(a) ? plan.thread_counts : std::vector<int>{1};
    for (int t : ts) {
      for (int w = 0; w < plan.warmup_runs; ++w) run_algo(a, g, t, plan.faithful_lock);
      for (int trial = 1; trial <= plan.repetitions; ++trial) {
        MstResult r = run_algo(a, g, t, plan.faithful_lock);
        BenchRow row;
        row.graph_name = plan.graph_name;
        row.algorithm = to_string(a);
        row.threads = t;
        row.trial = trial;
        row.elapsed_ms = r.elapsed_ms;
        row.mst_weight = r.total_weight;
        row.rounds = r.rounds;
        if (plan.verify) {
          const VerifyReport rep = verify_mst(g, r, *oracle);
          if (!rep.all_ok())
            throw BenchError(BenchErrorKind::VerificationFailed,
                             plan.graph_name + "/" + row.algorithm + " T=" + std::to_string(t) +
                                 " trial " + std::to_string(trial) + ": " + rep.details);
          row.verified = true;
        }
        if (progress)
          *progress << plan.graph_name << "," << row.algorithm << ",T=" << t << ",trial=" << trial
                    << ": " << row.elapsed_ms << " ms, weight=" << row.mst_weight
                    << ", rounds=" << row.rounds << "\n";
        rows.push_back(std::move(row));
      }
    }
  }

  // Every algorithm must agree on the MST weight; a mismatch is a correctness
  // failure and must surface before any timing summary.
  for (const BenchRow& row : rows)
    if (row.mst_weight != rows.front().mst_weight)
      throw BenchError(BenchErrorKind::VerificationFailed,
                       "mst_weight mismatch: " + rows.front().algorithm + " got " +
                           std::to_string(rows.front().mst_weight) + " but " + row.algorithm +
                           " T=" + std::to_string(row.threads) + " got " +
                           std::to_string(row.mst_weight));

  return rows;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto r = std::to_chars(buf, buf + sizeof buf, v);  // shortest round-trip form
  return std::string(buf, r.ptr);
}

}  // namespace

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "graph,algorithm,threads,trial,elapsed_ms,mst_weight,rounds,verified\n";
  for (const BenchRow& r : rows) {
    out << r.graph_name << ',' << r.algorithm << ',' << r.threads << ',' << r.trial << ','
        << format_double(r.elapsed_ms) << ',' << r.mst_weight << ',' << r.rounds << ','
        << (r.verified ? 1 : 0) << '\n';
  }
}

void write_csv_file(const std::vector<BenchRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_csv: cannot open " + path);
  write_csv(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

namespace {

[[noreturn]] void csv_fail(std::size_t line, const std::string& why) {
  throw BenchError(BenchErrorKind::CsvParse,
                   "csv line " + std::to_string(line) + ": " + why);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t c = line.find(',', pos);
    if (c == std::string::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, c - pos));
    pos = c + 1;
  }
}

template <typename T>
T parse_num(const std::string& s, std::size_t line, const char* field) {
  T v{};
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, v);
  if (ec != std::errc{} || p != e) csv_fail(line, std::string("bad ") + field + " '" + s + "'");
  return v;
}

}  // namespace

std::vector<BenchRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) csv_fail(1, "missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "graph,algorithm,threads,trial,elapsed_ms,mst_weight,rounds,verified")
    csv_fail(1, "unexpected header '" + line + "'");

  std::vector<BenchRow> rows;
  std::size_t ln = 1;
  while (std::getline(in, line)) {
    ++ln;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() != 8) csv_fail(ln, "expected 8 fields, got " + std::to_string(f.size()));
    BenchRow r;
    r.graph_name = f[0];
    r.algorithm = f[1];
    r.threads = parse_num<int>(f[2], ln, "threads");
    r.trial = parse_num<int>(f[3], ln, "trial");
    r.elapsed_ms = parse_num<double>(f[4], ln, "elapsed_ms");
    r.mst_weight = parse_num<Weight>(f[5], ln, "mst_weight");
    r.rounds = parse_num<std::uint32_t>(f[6], ln, "rounds");
    const int v = parse_num<int>(f[7], ln, "verified");
    if (v != 0 && v != 1) csv_fail(ln, "verified must be 0 or 1");
    r.verified = v == 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<BenchRow> read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw BenchError(BenchErrorKind::CsvParse, "cannot open " + path);
  return read_csv(in);
}

SpeedupSummary summarize_speedups(const std::vector<BenchRow>& rows) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

  struct PerGraph {
    std::vector<double> seq, seq_opt;
    std::map<std::pair<std::string, int>, std::vector<double>> parallel;  // (algo, T)
  };
  std::map<std::string, PerGraph> graphs;
  std::vector<std::string> graph_order;

  for (const BenchRow& r : rows) {
    if (!graphs.count(r.graph_name)) graph_order.push_back(r.graph_name);
    PerGraph& pg = graphs[r.graph_name];
    if (r.algorithm == "seq")
      pg.seq.push_back(r.elapsed_ms);
    else if (r.algorithm == "seq-opt")
      pg.seq_opt.push_back(r.elapsed_ms);
    else if (r.algorithm == "lock" || r.algorithm == "cas")
      pg.parallel[{r.algorithm, r.threads}].push_back(r.elapsed_ms);
  }

  SpeedupSummary s;
  s.lock_vs_seq_max = s.lock_vs_seq_opt_max = kNaN;
  s.cas_vs_seq_max = s.cas_vs_seq_opt_max = s.cas_vs_lock_max = kNaN;
  auto bump = [](double& acc, double v) {
    if (std::isnan(v)) return;
    if (std::isnan(acc) || v > acc) acc = v;
  };

  for (const std::string& name : graph_order) {
    const PerGraph& pg = graphs[name];
    if (pg.parallel.empty()) continue;
    if (pg.seq.empty() && pg.seq_opt.empty())
      throw BenchError(BenchErrorKind::MissingBaseline,
                       "graph '" + name + "' has parallel rows but no sequential baseline");

    const double med_seq = median(pg.seq);
    const double med_opt = median(pg.seq_opt);

    for (const auto& [key, samples] : pg.parallel) {
      const auto& [algo, threads] = key;
      const double med = median(samples);
      SpeedupRow row;
      row.graph = name;
      row.algorithm = algo;
      row.threads = threads;
      row.vs_seq = med_seq / med;          // NaN baseline propagates
      row.vs_seq_opt = med_opt / med;
      row.cas_vs_lock = kNaN;
      if (algo == "cas") {
        auto it = pg.parallel.find({"lock", threads});
        if (it != pg.parallel.end()) row.cas_vs_lock = median(it->second) / med;
      }
      if (algo == "lock") {
        bump(s.lock_vs_seq_max, row.vs_seq);
        bump(s.lock_vs_seq_opt_max, row.vs_seq_opt);
      } else {
        bump(s.cas_vs_seq_max, row.vs_seq);
        bump(s.cas_vs_seq_opt_max, row.vs_seq_opt);
        bump(s.cas_vs_lock_max, row.cas_vs_lock);
      }
      s.rows.push_back(std::move(row));
    }
  }
  return s;
}

void print_speedup_table(const SpeedupSummary& summary, std::ostream& out) {
  auto cell = [](double v) {
    if (std::isnan(v)) return std::string("-");
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
  };

  out << std::left << std::setw(16) << "graph" << std::setw(8) << "algo" << std::right
      << std::setw(8) << "threads" << std::setw(12) << "vs_seq" << std::setw(14) << "vs_seq_opt"
      << std::setw(14) << "cas_vs_lock" << "\n";
  for (const SpeedupRow& r : summary.rows) {
    out << std::left << std::setw(16) << r.graph << std::setw(8) << r.algorithm << std::right
        << std::setw(8) << r.threads << std::setw(12) << cell(r.vs_seq) << std::setw(14)
        << cell(r.vs_seq_opt) << std::setw(14) << cell(r.cas_vs_lock) << "\n";
  }
  out << "\n"
      << "max speedup, lock vs seq:     " << cell(summary.lock_vs_seq_max) << "\n"
      << "max speedup, lock vs seq-opt: " << cell(summary.lock_vs_seq_opt_max) << "\n"
      << "max speedup, cas vs seq:      " << cell(summary.cas_vs_seq_max) << "\n"
      << "max speedup, cas vs seq-opt:  " << cell(summary.cas_vs_seq_opt_max) << "\n"
      << "max ratio, cas vs lock:       " << cell(summary.cas_vs_lock_max) << "\n";
}

}  // namespace mst
