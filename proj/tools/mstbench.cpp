#include <omp.h>

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "mst/bench.hpp"
#include "mst/boruvka_parallel.hpp"
#include "mst/graph.hpp"

namespace {

// Exit codes: 0 success, 1 usage error, 2 graph validation error,
// 3 verification failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitGraph = 2;
constexpr int kExitVerify = 3;

int run_generate(const std::string& out, std::uint64_t n, int avg_degree, std::uint64_t seed) {
  mst::Graph g = mst::generate_graph(static_cast<mst::VertexId>(n), avg_degree, seed);
  mst::save_graph(g, out);
  std::cout << "wrote " << out << ": n=" << g.vertex_count() << " m=" << g.edge_count()
            << " seed=" << seed << "\n";
  return kExitOk;
}

std::string path_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name.resize(dot);
  return name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boruvka MST toolkit: workload generator, benchmark runner, speedup summary"};
  app.require_subcommand(0, 1);

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a random connected graph file");
  std::uint64_t gen_n = 0;
  int gen_degree = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--avg-degree", gen_degree, "Average vertex degree (edges = n*d/2)")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen->add_option("--out", gen_out, "Output graph path")->required();

  // run
  auto* run = app.add_subcommand("run", "Run algorithms over a graph and write a CSV report");
  std::string run_graph, run_preset, run_csv;
  std::vector<std::string> run_algos;
  std::vector<int> run_threads{1, 2, 4, 8, 16};
  int run_reps = 5;
  bool run_verify = false;
  bool run_faithful = false;
  auto* graph_opt = run->add_option("--graph", run_graph, "Graph file path");
  auto* preset_opt =
      run->add_option("--preset", run_preset, "Named workload preset (see --list-presets)");
  graph_opt->excludes(preset_opt);
  run->add_option("--algo", run_algos, "Algorithms: seq,seq-opt,lock,cas,kruskal")
      ->required()
      ->delimiter(',');
  run->add_option("--threads", run_threads, "Thread counts for parallel algorithms")
      ->delimiter(',');
  run->add_option("--reps", run_reps, "Timed trials per configuration")->check(CLI::PositiveNumber);
  run->add_flag("--verify", run_verify, "Check every result against the Kruskal oracle");
  run->add_flag("--faithful-lock", run_faithful,
                "Use the guarded-store lock protocol as studied (unsound; may abort)");
  run->add_option("--csv", run_csv, "CSV report output path")->required();

  // summarize
  auto* summ = app.add_subcommand("summarize", "Print a speedup table from a CSV report");
  std::string summ_csv;
  summ->add_option("--csv", summ_csv, "CSV report to read")->required();

  bool list_presets = false;
  app.add_flag("--list-presets", list_presets, "List built-in workload presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list_presets) {
      for (const auto& [name, spec] : mst::preset_table())
        std::cout << name << ": n=" << spec.n << " avg_degree=" << spec.avg_degree
                  << " seed=" << spec.seed << "\n";
      if (app.get_subcommands().empty()) return kExitOk;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return kExitUsage;
    }

    if (gen->parsed()) return run_generate(gen_out, gen_n, gen_degree, gen_seed);

    if (run->parsed()) {
      mst::BenchPlan plan;
      if (!run_preset.empty()) {
        auto spec = mst::find_preset(run_preset);
        if (!spec) {
          std::cerr << "unknown preset '" << run_preset << "'\n";
          return kExitUsage;
        }
        plan.generator = *spec;
        plan.graph_name = run_preset;
      } else if (!run_graph.empty()) {
        plan.graph_path = run_graph;
        plan.graph_name = path_stem(run_graph);
      } else {
        std::cerr << "run: one of --graph or --preset is required\n";
        return kExitUsage;
      }
      for (const std::string& s : run_algos) {
        auto a = mst::algo_from_string(s);
        if (!a) {
          std::cerr << "unknown algorithm '" << s << "'\n";
          return kExitUsage;
        }
        plan.algorithms.push_back(*a);
      }
      plan.thread_counts = run_threads;
      plan.repetitions = run_reps;
      plan.verify = run_verify;
      plan.faithful_lock = run_faithful;

      std::cout << "# hardware threads: " << std::thread::hardware_concurrency()
                << ", omp max: " << omp_get_max_threads() << "\n";
      const std::vector<mst::BenchRow> rows = mst::run_bench(plan, &std::cout);
      mst::write_csv_file(rows, run_csv);
      std::cout << "# wrote " << rows.size() << " rows to " << run_csv << "\n";
      return kExitOk;
    }

    if (summ->parsed()) {
      const auto rows = mst::read_csv_file(summ_csv);
      mst::print_speedup_table(mst::summarize_speedups(rows), std::cout);
      return kExitOk;
    }

    return kExitUsage;
  } catch (const mst::GraphError& e) {
    std::cerr << "graph error: " << e.what() << "\n";
    return kExitGraph;
  } catch (const mst::BenchError& e) {
    if (e.kind() == mst::BenchErrorKind::VerificationFailed) {
      std::cerr << "verification failed: " << e.what() << "\n";
      return kExitVerify;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const mst::WorkerPanic& e) {
    std::cerr << "worker panic: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
