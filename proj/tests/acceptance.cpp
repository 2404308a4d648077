// Runs every acceptance criterion at its stated tolerance and prints one
// PASS/FAIL line per criterion. Exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boss/benchmark.hpp"
#include "boss/fixtures.hpp"
#include "boss/metrics.hpp"
#include "boss/random_graph.hpp"
#include "boss/rng.hpp"
#include "boss/search.hpp"
#include "boss/sem.hpp"
#include "oracles.hpp"

using namespace boss;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<Node> order_of(const std::vector<std::string>& names, const Dag& g) {
  std::vector<Node> out;
  for (const auto& n : names) out.push_back(g.index_of(n));
  return out;
}

// Edge counts of all 24 orders of the worked example, TRUTH rows marked.
struct TableRow {
  std::vector<std::string> order;
  int edges;
  bool truth;
};

const std::vector<TableRow>& worked_table() {
  static const std::vector<TableRow> rows{
      {{"X1", "X2", "X3", "X4"}, 4, true},  {{"X1", "X2", "X4", "X3"}, 6, false},
      {{"X1", "X3", "X2", "X4"}, 4, false}, {{"X1", "X3", "X4", "X2"}, 6, false},
      {{"X1", "X4", "X2", "X3"}, 6, false}, {{"X1", "X4", "X3", "X2"}, 6, false},
      {{"X2", "X1", "X3", "X4"}, 4, true},  {{"X2", "X1", "X4", "X3"}, 6, false},
      {{"X2", "X3", "X1", "X4"}, 5, false}, {{"X2", "X3", "X4", "X1"}, 5, false},
      {{"X2", "X4", "X1", "X3"}, 6, false}, {{"X2", "X4", "X3", "X1"}, 5, false},
      {{"X3", "X1", "X2", "X4"}, 4, true},  {{"X3", "X1", "X4", "X2"}, 6, false},
      {{"X3", "X2", "X1", "X4"}, 5, false}, {{"X3", "X2", "X4", "X1"}, 5, false},
      {{"X3", "X4", "X1", "X2"}, 6, false}, {{"X3", "X4", "X2", "X1"}, 5, false},
      {{"X4", "X1", "X2", "X3"}, 6, false}, {{"X4", "X1", "X3", "X2"}, 6, false},
      {{"X4", "X2", "X1", "X3"}, 6, false}, {{"X4", "X2", "X3", "X1"}, 5, false},
      {{"X4", "X3", "X1", "X2"}, 6, false}, {{"X4", "X3", "X2", "X1"}, 5, false}};
  return rows;
}

// Every listed count matches, and the minimizing orders build exactly the
// three TRUTH DAGs.
Outcome worked_example_table() {
  const Dag g = worked_example_dag();
  const SourcePtr s = fixture_source("workedExample");
  int matched = 0;
  std::vector<Dag> minimal, truth;
  const auto add = [](std::vector<Dag>& v, Dag d) {
    if (std::find(v.begin(), v.end(), d) == v.end()) v.push_back(std::move(d));
  };
  for (const TableRow& row : worked_table()) {
    const OrderState st(s, order_of(row.order, g));
    matched += st.score() == row.edges;
    if (st.score() == 4) add(minimal, st.build_dag());
    if (row.truth) add(truth, st.build_dag());
  }
  const bool same = minimal.size() == truth.size() &&
                    std::all_of(minimal.begin(), minimal.end(), [&](const Dag& d) {
                      return std::find(truth.begin(), truth.end(), d) != truth.end();
                    });
  std::ostringstream d;
  d << matched << "/24 rows match, " << minimal.size() << " minimal DAGs";
  return {matched == 24 && truth.size() == 3 && same, d.str()};
}

Outcome counterexamples() {
  bool pass = true;
  std::ostringstream d;
  for (int k = 1; k <= 6; ++k) {
    const SourcePtr s = fixture_source("counterexample" + std::to_string(k));
    const UniqueCpdags b = unique_cpdag_count(s, Algorithm::boss, 500, k);
    const SpResult sp_result = sp(s);
    const std::set<Cpdag> sp_set(sp_result.minimizing_cpdags.begin(),
                                 sp_result.minimizing_cpdags.end());
    const bool ok = b.count == 1 && sp_set.size() == 1 && b.cpdags == sp_set;
    pass = pass && ok;
    d << (k > 1 ? "; " : "") << "c" << k << " BOSS = " << b.count
      << ", SP minimizing = " << sp_set.size();
  }
  return {pass, d.str()};
}

Outcome parent_method_divergence() {
  const SourcePtr s = fixture_source("counterexample3");
  const double vp = sp(s, ScoreKind::edge_count, ParentMethod::verma_pearl).best.final_score;
  const double gs = sp(s, ScoreKind::edge_count, ParentMethod::grow_shrink).best.final_score;
  std::ostringstream d;
  d << "verma-pearl " << vp << " edges, grow-shrink " << gs << " edges";
  return {vp == 7 && gs == 8, d.str()};
}

Outcome oracle_study() {
  const BenchmarkTable t = run_benchmark(oracle_study_spec(10, parse_value_list("1..9"), 10, 0));
  int perfect_rows = 0;
  for (const auto& row : t.rows) {
    // Means of values in [0, 1] equal 1 only when every run does.
    perfect_rows += row.completed == 10 && row.mean.ap == 1.0 && row.mean.ar == 1.0 &&
                    row.mean.ahp == 1.0 && row.mean.ahr == 1.0;
  }
  std::ostringstream d;
  d << perfect_rows << "/9 degrees perfect over 10 runs each";
  return {perfect_rows == 9, d.str()};
}

Outcome sp_equivalence() {
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    const int n = 4 + i % 4;
    RandomGraphSpec gs;
    gs.num_nodes = n;
    gs.avg_degree = 1 + (i / 4) % (n - 1);
    gs.seed = derive_seed(2024, i);
    const SourcePtr s = dsep_oracle(generate_dag(gs));
    const SpResult best = sp(s);
    SearchConfig c;
    c.shuffle = true;
    c.seed = derive_seed(gs.seed, "search");
    const SearchResult r = boss_search(s, c);
    agree += r.final_score == best.best.final_score &&
             std::find(best.minimizing_cpdags.begin(), best.minimizing_cpdags.end(), r.cpdag) !=
                 best.minimizing_cpdags.end();
  }
  std::ostringstream d;
  d << agree << "/100 DAGs";
  return {agree == 100, d.str()};
}

// The search starts from the given variable order. A second Markov DAG with
// four edges ties the truth under both sources, so the count over all 24
// starts is reported but not required.
Outcome path_cancellation() {
  const LinearSem sem = path_cancel_sem();
  const Cpdag truth = dag_to_cpdag(sem.dag());
  const Eigen::MatrixXd cov = population_covariance(sem);
  const auto names = sem.dag().names();
  const SourcePtr oracle_source = population_partial_corr(names, cov, 1e-8);
  const SourcePtr bic_source = population_bic(names, cov, 1e6);
  SearchConfig edge_config;
  SearchConfig bic_config;
  bic_config.score_kind = ScoreKind::bic;
  const bool oracle_ok = boss_search(oracle_source, edge_config).cpdag == truth;
  const bool bic_ok = boss_search(bic_source, bic_config).cpdag == truth;
  int oracle_starts = 0, bic_starts = 0;
  std::vector<Node> order{0, 1, 2, 3};
  do {
    edge_config.initial_order = bic_config.initial_order = order;
    oracle_starts += boss_search(oracle_source, edge_config).cpdag == truth;
    bic_starts += boss_search(bic_source, bic_config).cpdag == truth;
  } while (std::next_permutation(order.begin(), order.end()));
  std::ostringstream d;
  d << "partial correlation " << (oracle_ok ? "true" : "wrong") << " CPDAG, bic "
    << (bic_ok ? "true" : "wrong") << " CPDAG; over all starts " << oracle_starts << "/24 and "
    << bic_starts << "/24";
  return {oracle_ok && bic_ok && truth.adjacent(0, 3), d.str()};
}

Outcome desk_accuracy() {
  using clock = std::chrono::steady_clock;
  BenchmarkSpec s;
  s.graph.num_nodes = 20;
  s.graph.avg_degree = 4;
  s.sim.sample_size = 10000;
  s.penalty_discount = 2;
  s.runs = 5;
  s.seed_base = 1;
  auto t0 = clock::now();
  const MetricsRecord m = run_benchmark(s).rows[0].mean;
  const double main_secs = std::chrono::duration<double>(clock::now() - t0).count();

  BenchmarkSpec smoke = s;
  smoke.graph.num_nodes = 60;
  smoke.graph.avg_degree = 6;
  smoke.sim.sample_size = 500;
  smoke.runs = 1;
  t0 = clock::now();
  const MetricsRecord m2 = run_benchmark(smoke).rows[0].mean;
  const double smoke_secs = std::chrono::duration<double>(clock::now() - t0).count();

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "20 nodes: AP %.2f AR %.2f AHP %.2f AHR %.2f in %.1fs; "
                "60 nodes: AP %.2f AR %.2f in %.1fs",
                m.ap, m.ar, m.ahp, m.ahr, main_secs, m2.ap, m2.ar, smoke_secs);
  const bool pass = m.ap >= 0.95 && m.ar >= 0.95 && m.ahp >= 0.90 && m.ahr >= 0.90 &&
                    main_secs < 120 && m2.ap >= 0.90 && m2.ar >= 0.90 && smoke_secs < 600;
  return {pass, buf};
}

Outcome incremental_scoring() {
  RandomGraphSpec gs;
  gs.num_nodes = 15;
  gs.avg_degree = 4;
  gs.seed = 15;
  const Dag g = generate_dag(gs);
  SimSpec ss;
  ss.seed = 15;
  const SourcePtr edge_source = dsep_oracle(g);
  const SourcePtr bic_source = dataset_bic(simulate_data(parameterize_sem(g, ss), 500, 15));
  Rng rng(derive_seed(15, "moves"));
  int ok = 0;
  std::unique_ptr<OrderState> st;
  for (int step = 0; step < 1000; ++step) {
    // Fresh problems every 100 steps alternate between the two score kinds.
    const ScoreKind kind = (step / 100) % 2 ? ScoreKind::bic : ScoreKind::edge_count;
    const SourcePtr& s = kind == ScoreKind::bic ? bic_source : edge_source;
    if (step % 100 == 0) {
      std::vector<Node> order(15);
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      st = std::make_unique<OrderState>(s, order, ScorerOptions{kind});
    }
    const Node v = static_cast<Node>(rng.index(15));
    switch (rng.index(4)) {
      case 0: st->relocate(v, static_cast<int>(rng.index(15))); break;
      case 1: st->swap(v, static_cast<Node>(rng.index(15))); break;
      case 2: st->bookmark("b"); break;
      default:
        if (st->has_bookmark("b")) st->restore("b");
    }
    const OrderState fresh(s, st->order(), ScorerOptions{kind, ParentMethod::grow_shrink, false});
    const double tol = kind == ScoreKind::bic ? 1e-9 : 0.0;
    ok += std::abs(st->score() - fresh.score()) <= tol &&
          std::abs(st->score() - st->full_rescore()) <= tol;
  }
  std::ostringstream d;
  d << ok << "/1000 steps";
  return {ok == 1000, d.str()};
}

Outcome cpdag_conversion() {
  Rng rng(derive_seed(9, "cpdag"));
  int ok = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng.index(5));
    const Dag g = oracle::random_dag(n, rng.uniform(0.1, 0.9), rng);
    ok += dag_to_cpdag(g) == oracle::mec_consensus(g);
  }
  std::ostringstream d;
  d << ok << "/500 DAGs";
  return {ok == 500, d.str()};
}

// The same five datasets are searched at every penalty.
Outcome penalty_sweep() {
  const std::vector<double> penalties{2, 3, 4, 5};
  std::vector<double> ap(penalties.size(), 0.0), ar(penalties.size(), 0.0);
  for (int seed = 0; seed < 5; ++seed) {
    RandomGraphSpec gs;
    gs.num_nodes = 30;
    gs.avg_degree = 2;
    gs.seed = derive_seed(seed, "graph");
    const Dag g = generate_dag(gs);
    SimSpec ss;
    ss.seed = derive_seed(seed, "sem");
    const Dataset d = simulate_data(parameterize_sem(g, ss), 50, derive_seed(seed, "data"));
    const Cpdag truth = dag_to_cpdag(g);
    for (std::size_t i = 0; i < penalties.size(); ++i) {
      SearchConfig c;
      c.score_kind = ScoreKind::bic;
      c.shuffle = true;
      c.seed = derive_seed(seed, "search");
      const MetricsRecord m = compare_cpdags(boss_search(dataset_bic(d, penalties[i]), c).cpdag,
                                             truth);
      ap[i] += m.ap / 5;
      ar[i] += m.ar / 5;
    }
  }
  bool pass = true;
  std::ostringstream d;
  d.precision(3);
  for (std::size_t i = 0; i < penalties.size(); ++i) {
    d << (i ? "; " : "") << "c=" << penalties[i] << " AP " << ap[i] << " AR " << ar[i];
    if (i > 0) pass = pass && ap[i] >= ap[i - 1] && ar[i] <= ar[i - 1];
  }
  return {pass, d.str()};
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "worked-example table", worked_example_table, 1},
      {2, "counterexamples", counterexamples, 60},
      {3, "verma-pearl vs grow-shrink", parent_method_divergence, 0},
      {4, "oracle study", oracle_study, 30},
      {5, "sp equivalence", sp_equivalence, 300},
      {6, "path cancellation", path_cancellation, 0},
      {7, "desk-scale accuracy", desk_accuracy, 0},
      {8, "incremental scoring", incremental_scoring, 0},
      {9, "cpdag conversion", cpdag_conversion, 60},
      {10, "penalty sweep", penalty_sweep, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    // A zero limit means the criterion times itself or has no runtime bound.
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s %2d %s: %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs, in_time ? "" : ", over time limit");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
