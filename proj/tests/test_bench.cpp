#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mst/bench.hpp"

using namespace mst;

namespace {

BenchRow make_row(const std::string& graph, const std::string& algo, int threads, int trial,
                  double ms, Weight w) {
  BenchRow r;
  r.graph_name = graph;
  r.algorithm = algo;
  r.threads = threads;
  r.trial = trial;
  r.elapsed_ms = ms;
  r.mst_weight = w;
  r.rounds = 5;
  r.verified = true;
  return r;
}

}  // namespace

TEST_CASE("algo names round-trip") {
  for (Algo a : {Algo::Seq, Algo::SeqOpt, Algo::Lock, Algo::Cas, Algo::Kruskal}) {
    auto back = algo_from_string(to_string(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK_FALSE(algo_from_string("qmst").has_value());
  CHECK(algo_is_parallel(Algo::Lock));
  CHECK(algo_is_parallel(Algo::Cas));
  CHECK_FALSE(algo_is_parallel(Algo::Seq));
  CHECK_FALSE(algo_is_parallel(Algo::Kruskal));
}

TEST_CASE("preset table covers the nine documented workloads") {
  const auto& t = preset_table();
  REQUIRE(t.size() == 9);
  auto p = find_preset("Graph10K_3");
  REQUIRE(p.has_value());
  CHECK(p->n == 10'000);
  CHECK(p->avg_degree == 3);
  auto q = find_preset("Graph1M_9");
  REQUIRE(q.has_value());
  CHECK(q->n == 1'000'000);
  CHECK(q->avg_degree == 9);
  CHECK_FALSE(find_preset("Graph2M_4").has_value());
}

TEST_CASE("CSV write/read is identity on every field") {
  std::vector<BenchRow> rows = {
      make_row("g1", "seq", 1, 1, 200.125, 12345),
      make_row("g1", "cas", 4, 2, 0.0009765625, 12345),
      make_row("g2", "lock", 16, 3, 1.0 / 3.0, 99999999999ull),
  };
  rows[1].verified = false;
  rows[2].rounds = 0;

  std::ostringstream out;
  write_csv(rows, out);
  std::istringstream in(out.str());
  const std::vector<BenchRow> back = read_csv(in);

  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].graph_name == rows[i].graph_name);
    CHECK(back[i].algorithm == rows[i].algorithm);
    CHECK(back[i].threads == rows[i].threads);
    CHECK(back[i].trial == rows[i].trial);
    CHECK(back[i].elapsed_ms == rows[i].elapsed_ms);  // exact, not approximate
    CHECK(back[i].mst_weight == rows[i].mst_weight);
    CHECK(back[i].rounds == rows[i].rounds);
    CHECK(back[i].verified == rows[i].verified);
  }
}

TEST_CASE("CSV parse errors are reported") {
  auto expect_fail = [](const char* text) {
    std::istringstream in(text);
    try {
      read_csv(in);
      FAIL("expected CsvParse for: ", text);
    } catch (const BenchError& e) {
      CHECK(e.kind() == BenchErrorKind::CsvParse);
    }
  };
  expect_fail("");
  expect_fail("graph,algorithm\n");
  expect_fail("graph,algorithm,threads,trial,elapsed_ms,mst_weight,rounds,verified\ng,seq,1\n");
  expect_fail(
      "graph,algorithm,threads,trial,elapsed_ms,mst_weight,rounds,verified\n"
      "g,seq,1,1,abc,5,1,0\n");
  expect_fail(
      "graph,algorithm,threads,trial,elapsed_ms,mst_weight,rounds,verified\n"
      "g,seq,1,1,2.5,5,1,7\n");
}

TEST_CASE("median is permutation-invariant") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({1.0, 2.0, 3.0}) == 2.0);
  CHECK(median({4.0, 1.0}) == 2.5);
  CHECK(std::isnan(median({})));
}

TEST_CASE("speedup summary: ratio definitions") {
  std::vector<BenchRow> rows;
  // seq median 200, cas@4 median 100 -> speedup 2.0
  for (int t = 1; t <= 3; ++t) rows.push_back(make_row("g", "seq", 1, t, 200.0, 7));
  for (int t = 1; t <= 3; ++t) rows.push_back(make_row("g", "seq-opt", 1, t, 150.0, 7));
  for (int t = 1; t <= 3; ++t) rows.push_back(make_row("g", "cas", 4, t, 100.0, 7));
  for (int t = 1; t <= 3; ++t) rows.push_back(make_row("g", "lock", 4, t, 150.0, 7));

  SpeedupSummary s = summarize_speedups(rows);
  REQUIRE(s.rows.size() == 2);
  const SpeedupRow* cas = nullptr;
  const SpeedupRow* lock = nullptr;
  for (const auto& r : s.rows) (r.algorithm == "cas" ? cas : lock) = &r;
  REQUIRE(cas != nullptr);
  REQUIRE(lock != nullptr);

  CHECK(cas->vs_seq == doctest::Approx(2.0));
  CHECK(cas->vs_seq_opt == doctest::Approx(1.5));
  CHECK(cas->cas_vs_lock == doctest::Approx(1.5));
  CHECK(lock->vs_seq == doctest::Approx(200.0 / 150.0));
  CHECK(lock->vs_seq_opt == doctest::Approx(1.0));  // identical medians -> 1.0

  CHECK(s.cas_vs_seq_max == doctest::Approx(2.0));
  CHECK(s.lock_vs_seq_max == doctest::Approx(200.0 / 150.0));
  CHECK(s.cas_vs_lock_max == doctest::Approx(1.5));
}

TEST_CASE("speedup summary requires a baseline") {
  std::vector<BenchRow> rows = {make_row("g", "cas", 4, 1, 100.0, 7)};
  try {
    summarize_speedups(rows);
    FAIL("expected MissingBaseline");
  } catch (const BenchError& e) {
    CHECK(e.kind() == BenchErrorKind::MissingBaseline);
  }
  // sequential-only rows are fine and produce no speedup rows
  std::vector<BenchRow> seq_only = {make_row("g", "seq", 1, 1, 100.0, 7)};
  CHECK(summarize_speedups(seq_only).rows.empty());
}

TEST_CASE("run_bench produces one row per (algorithm, threads, trial)") {
  BenchPlan plan;
  plan.graph_name = "unit";
  plan.generator = GeneratorSpec{400, 3, 17};
  plan.algorithms = {Algo::Seq, Algo::Cas};
  plan.thread_counts = {1, 2, 4};
  plan.repetitions = 3;
  plan.verify = true;
  plan.warmup_runs = 0;

  const auto rows = run_bench(plan);
  CHECK(rows.size() == 3 + 9);  // seq ignores thread counts
  for (const auto& r : rows) {
    CHECK(r.mst_weight == rows.front().mst_weight);
    CHECK(r.verified);
  }
}

TEST_CASE("run_bench on kruskal verifies against itself") {
  BenchPlan plan;
  plan.graph_name = "unit";
  plan.generator = GeneratorSpec{200, 4, 5};
  plan.algorithms = {Algo::Kruskal};
  plan.repetitions = 1;
  plan.verify = true;
  plan.warmup_runs = 0;

  const auto rows = run_bench(plan);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].verified);
  CHECK(rows[0].rounds == 1);
}

TEST_CASE("summary printing marks unavailable ratios") {
  std::vector<BenchRow> rows = {
      make_row("g", "seq", 1, 1, 100.0, 7),
      make_row("g", "lock", 2, 1, 80.0, 7),
  };
  std::ostringstream out;
  print_speedup_table(summarize_speedups(rows), out);
  const std::string text = out.str();
  CHECK(text.find("lock") != std::string::npos);
  CHECK(text.find("-") != std::string::npos);  // no seq-opt baseline -> dash
}
