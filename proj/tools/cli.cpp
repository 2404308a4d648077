#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boss/benchmark.hpp"
#include "boss/ci_facts.hpp"
#include "boss/dataset.hpp"
#include "boss/error.hpp"
#include "boss/fixtures.hpp"
#include "boss/metrics.hpp"
#include "boss/random_graph.hpp"
#include "boss/search.hpp"
#include "boss/sem.hpp"
#include "boss/source.hpp"

namespace boss::cli {

namespace {

const char* kConfigHelp = "File of `key = value` lines named after long flags; flags win";

void add_config(CLI::App* app) {
  // Expanded by expand_config before parsing; registered for help and validation.
  app->add_option("--config")->description(kConfigHelp);
}

// Splices the lines of the subcommand's --config file in as `--key=value`
// arguments ahead of the command line, so explicit flags take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 1; i < args.size() && !path; ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return args;
  std::vector<std::string> out{args.front()};
  for (const auto& [key, value, line] : parse_key_values(read_file(*path))) {
    std::string flag = key;
    std::replace(flag.begin(), flag.end(), '_', '-');
    out.push_back("--" + flag + "=" + value);
  }
  out.insert(out.end(), args.begin() + 1, args.end());
  return out;
}

bool on(const std::string& value) { return value == "on"; }

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

CLI::Option* add_switch(CLI::App* app, const std::string& name, std::string& value,
                        const std::string& help) {
  return app->add_option(name, value, help)
      ->check(CLI::IsMember({"on", "off"}))
      ->capture_default_str();
}

struct SimulateArgs {
  RandomGraphSpec graph;
  bool scale_free = false;
  SimSpec sim;
  std::uint64_t seed = 0;
  std::string graph_file;
  std::string out_data;
  std::string out_graph;
  std::string out_cov;
};

void run_simulate(SimulateArgs a, std::ostream& out) {
  a.graph.generator =
      a.scale_free ? GraphGenerator::scale_free : GraphGenerator::erdos_renyi_forward;
  a.graph.seed = a.seed;
  a.sim.seed = a.seed;
  a.sim.validate();
  Dag truth = a.graph_file.empty() ? Dag{{}} : parse_graph_text(read_file(a.graph_file));
  if (a.graph_file.empty()) {
    a.graph.validate();
    truth = generate_dag(a.graph);
  }
  const LinearSem sem = parameterize_sem(truth, a.sim);
  const Dataset data = simulate_data(sem, a.sim.sample_size, a.seed);
  write_file(a.out_data, data.to_csv());
  if (!a.out_graph.empty()) write_file(a.out_graph, format_graph_text(truth));
  if (!a.out_cov.empty()) {
    write_file(a.out_cov, covariance_to_csv(truth.names(), population_covariance(sem)));
  }
  out << "simulated " << data.num_rows() << " cases over " << truth.size() << " variables, "
      << truth.edge_count() << " edges\n";
}

// Exactly one of data, cov and facts is set.
struct InputArgs {
  std::string data;
  std::string cov;
  std::string facts;
  double pseudo_n = 1e6;
  double penalty = 2.0;
  std::string score = "bic";
  bool score_given = false;
  std::string parents = "grow-shrink";
};

void add_input_options(CLI::App* app, InputArgs& a) {
  CLI::Option_group* input = app->add_option_group("input", "Exactly one source of judgements");
  CLI::Option* cov = input->add_option("--cov", a.cov, "Covariance CSV, scored by population BIC");
  input->add_option("--data", a.data, "Dataset CSV, scored by BIC");
  input->add_option("--facts", a.facts, "Conditional independence fact list");
  input->require_option(1);
  app->add_option("-n,--pseudo-n", a.pseudo_n, "Sample size assumed for --cov")
      ->needs(cov)
      ->capture_default_str();
  app->add_option("--penalty", a.penalty, "BIC penalty discount c")->capture_default_str();
  app->add_option("--score", a.score, "Permutation score")
      ->check(CLI::IsMember({"bic", "edge"}))
      ->capture_default_str();
  app->add_option("--parents", a.parents, "Parent construction within a prefix")
      ->check(CLI::IsMember({"grow-shrink", "verma-pearl"}))
      ->capture_default_str();
}

struct LoadedSource {
  SourcePtr source;
  ScoreKind kind;
  ParentMethod method;
};

LoadedSource load_source(const InputArgs& a) {
  LoadedSource s;
  s.method = a.parents == "verma-pearl" ? ParentMethod::verma_pearl : ParentMethod::grow_shrink;
  if (!(a.penalty > 0.0)) throw InputError("penalty discount must be positive");
  if (!a.facts.empty()) {
    if (a.score_given && a.score == "bic") throw InputError("a fact list supports only --score edge");
    s.source = fact_oracle(parse_fact_text(read_file(a.facts)));
    s.kind = ScoreKind::edge_count;
    return s;
  }
  if (!a.data.empty()) {
    s.source = dataset_bic(Dataset::from_csv(read_file(a.data)), a.penalty);
  } else {
    if (!(a.pseudo_n >= 1.0)) throw InputError("pseudo sample size must be at least 1");
    auto [names, cov] = covariance_from_csv(read_file(a.cov));
    s.source = population_bic(std::move(names), std::move(cov), a.pseudo_n, a.penalty);
  }
  s.kind = a.score == "bic" ? ScoreKind::bic : ScoreKind::edge_count;
  return s;
}

nlohmann::json cpdag_json(const Cpdag& g) {
  nlohmann::json directed = nlohmann::json::array();
  nlohmann::json undirected = nlohmann::json::array();
  for (auto [a, b] : g.directed()) directed.push_back({g.name(a), g.name(b)});
  for (auto [a, b] : g.undirected()) undirected.push_back({g.name(a), g.name(b)});
  return {{"nodes", g.names()}, {"directed", directed}, {"undirected", undirected}};
}

struct SearchArgs {
  InputArgs input;
  std::string two_step = "on";
  std::string left_only = "off";
  std::string cache = "on";
  int escape_depth = SearchConfig{}.escape_depth;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string json;
};

void run_search(const SearchArgs& a, std::ostream& out) {
  const LoadedSource s = load_source(a.input);
  SearchConfig c;
  c.score_kind = s.kind;
  c.parent_method = s.method;
  c.use_two_step = on(a.two_step);
  c.move_direction = on(a.left_only) ? MoveDirection::left_only : MoveDirection::both;
  c.caching = on(a.cache);
  c.escape_depth = a.escape_depth;
  if (a.seed) {
    c.shuffle = true;
    c.seed = *a.seed;
  }
  const SearchResult r = boss_search(s.source, c);
  const std::string text = format_graph_text(r.cpdag);
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
    out << "score " << r.final_score << ", " << r.cpdag.edge_count() << " edges, "
        << r.move_count << " moves\n";
  }
  if (!a.json.empty()) {
    nlohmann::json order = nlohmann::json::array();
    for (Node v : r.final_order) order.push_back(s.source->names()[v]);
    nlohmann::json j = {{"order", order},
                        {"score", r.final_score},
                        {"moves", r.move_count},
                        {"elapsed_seconds", r.elapsed_seconds},
                        {"score_trace", r.score_trace},
                        {"cpdag", cpdag_json(r.cpdag)}};
    write_file(a.json, j.dump(2) + "\n");
  }
}

struct OracleArgs {
  int nodes = 10;
  std::string degrees = "1..9";
  int runs = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string json;
};

void run_oracle_study(const OracleArgs& a, std::ostream& out) {
  BenchmarkSpec spec = oracle_study_spec(a.nodes, parse_value_list(a.degrees), a.runs, a.seed);
  spec.threads = a.threads;
  const BenchmarkTable table = run_benchmark(spec);
  out << format_table(table);
  if (!a.json.empty()) write_file(a.json, table_to_json(table).dump(2) + "\n");
}

struct CounterexampleArgs {
  int restarts = 500;
  std::optional<int> fixture;
  std::uint64_t seed = 0;
};

void run_counterexamples(const CounterexampleArgs& a, std::ostream& out) {
  if (a.restarts < 1) throw InputError("restarts must be at least 1");
  const int lo = a.fixture.value_or(1);
  const int hi = a.fixture.value_or(6);
  for (int k = lo; k <= hi; ++k) {
    const std::string name = "counterexample" + std::to_string(k);
    const SourcePtr source = fixture_source(name);
    const UniqueCpdags boss_out = unique_cpdag_count(source, Algorithm::boss, a.restarts, a.seed);
    const UniqueCpdags sp_out = unique_cpdag_count(source, Algorithm::sp, 1, a.seed);
    const SpResult minima = sp(source);
    out << name << ": minimal edges " << minima.best.final_score << ", minimizing CPDAGs "
        << minima.minimizing_cpdags.size() << ", BOSS = " << boss_out.count
        << ", SP = " << sp_out.count << "\n";
  }
}

struct SpArgs {
  InputArgs input;
  std::string out;
};

void run_sp(const SpArgs& a, std::ostream& out) {
  const LoadedSource s = load_source(a.input);
  const SpResult r = sp(s.source, s.kind, s.method);
  out << "minimal score " << r.best.final_score << ", minimizing orders "
      << r.minimizing_orders.size() << ", minimizing CPDAGs " << r.minimizing_cpdags.size()
      << "\n";
  const std::string text = format_graph_text(r.best.cpdag);
  if (a.out.empty()) {
    out << text;
  } else {
    write_file(a.out, text);
  }
}

struct BenchmarkArgs {
  std::string spec;
  std::string out;
  std::optional<int> threads;
};

void run_benchmark_command(const BenchmarkArgs& a, std::ostream& out) {
  BenchmarkSpec spec = parse_benchmark_spec(read_file(a.spec));
  if (a.threads) spec.threads = *a.threads;
  const BenchmarkTable table = run_benchmark(spec);
  out << format_table(table);
  if (!a.out.empty()) write_file(a.out, table_to_json(table).dump(2) + "\n");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitRuntime;
  }

  CLI::App app{"Permutation-based causal structure search"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Draw a random DAG, a linear SEM and data");
  add_config(simulate);
  simulate->add_option("--nodes", sim.graph.num_nodes, "Number of variables")
      ->capture_default_str();
  simulate->add_option("--avg-degree", sim.graph.avg_degree, "Average degree")
      ->capture_default_str();
  simulate->add_flag("--scale-free", sim.scale_free, "Preferential attachment graph");
  simulate->add_option("--alpha", sim.graph.scale_free.alpha, "Scale-free alpha")
      ->capture_default_str();
  simulate->add_option("--beta", sim.graph.scale_free.beta, "Scale-free beta")
      ->capture_default_str();
  simulate->add_option("--delta-in", sim.graph.scale_free.delta_in, "Scale-free delta_in")
      ->capture_default_str();
  simulate->add_option("--delta-out", sim.graph.scale_free.delta_out, "Scale-free delta_out")
      ->capture_default_str();
  simulate->add_option("--coef-low", sim.sim.coef_low, "Smallest coefficient magnitude")
      ->capture_default_str();
  simulate->add_option("--coef-high", sim.sim.coef_high, "Largest coefficient magnitude")
      ->capture_default_str();
  simulate->add_option("--var-low", sim.sim.var_low, "Smallest error variance")
      ->capture_default_str();
  simulate->add_option("--var-high", sim.sim.var_high, "Largest error variance")
      ->capture_default_str();
  simulate->add_option("-n,--samples", sim.sim.sample_size, "Number of cases")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Seed for graph, SEM and data")->capture_default_str();
  simulate->add_option("--graph", sim.graph_file, "Use this DAG instead of a random one");
  simulate->add_option("--out-data", sim.out_data, "Output dataset CSV")->required();
  simulate->add_option("--out-graph", sim.out_graph, "Output true DAG");
  simulate->add_option("--out-cov", sim.out_cov, "Output population covariance CSV");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "Run BOSS and print the CPDAG");
  add_config(search);
  add_input_options(search, search_args.input);
  add_switch(search, "--two-step", search_args.two_step, "Two-step triangle moves");
  add_switch(search, "--left-only", search_args.left_only, "Only move variables leftward");
  add_switch(search, "--cache", search_args.cache, "Cache Markov blankets and scores");
  search->add_option("--escape-depth", search_args.escape_depth, "Tuck search depth, 0 disables")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  search->add_option("--seed", search_args.seed, "Shuffle the initial order with this seed");
  search->add_option("--out", search_args.out, "Output CPDAG file; stdout when absent");
  search->add_option("--json", search_args.json, "Output JSON summary");

  OracleArgs oracle;
  CLI::App* oracle_study =
      app.add_subcommand("oracle-study", "BOSS with a d-separation oracle over random graphs");
  add_config(oracle_study);
  oracle_study->add_option("--nodes", oracle.nodes, "Number of variables")->capture_default_str();
  oracle_study->add_option("--degrees", oracle.degrees, "Average degrees, \"a..b\" or \"a,b,c\"")
      ->capture_default_str();
  oracle_study->add_option("--runs", oracle.runs, "Graphs per degree")->capture_default_str();
  oracle_study->add_option("--seed", oracle.seed, "Seed base")->capture_default_str();
  oracle_study->add_option("--threads", oracle.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle_study->add_option("--json", oracle.json, "Output JSON table");

  CounterexampleArgs cex;
  CLI::App* counterexamples = app.add_subcommand(
      "counterexamples", "Unique CPDAG counts for BOSS restarts and SP on the CI fixtures");
  add_config(counterexamples);
  counterexamples->add_option("--restarts", cex.restarts, "Shuffled BOSS restarts")
      ->capture_default_str();
  counterexamples->add_option("--fixture", cex.fixture, "Single fixture 1..6")
      ->check(CLI::Range(1, 6));
  counterexamples->add_option("--seed", cex.seed, "Seed base for restarts")->capture_default_str();

  SpArgs sp_args;
  CLI::App* sp_cmd = app.add_subcommand("sp", "Exhaustive sparsest permutation search");
  add_config(sp_cmd);
  add_input_options(sp_cmd, sp_args.input);
  sp_cmd->add_option("--out", sp_args.out, "Output CPDAG file; stdout when absent");

  BenchmarkArgs bench;
  CLI::App* benchmark = app.add_subcommand("benchmark", "Run a benchmark spec file");
  benchmark->add_option("--spec", bench.spec, "Benchmark spec (`key = value` lines)")->required();
  benchmark->add_option("--out", bench.out, "Output JSON table");
  benchmark->add_option("--threads", bench.threads, "Worker threads, overriding the spec")
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      run_simulate(sim, out);
    } else if (search->parsed()) {
      search_args.input.score_given = search->count("--score") > 0;
      run_search(search_args, out);
    } else if (oracle_study->parsed()) {
      run_oracle_study(oracle, out);
    } else if (counterexamples->parsed()) {
      run_counterexamples(cex, out);
    } else if (sp_cmd->parsed()) {
      sp_args.input.score_given = sp_cmd->count("--score") > 0;
      run_sp(sp_args, out);
    } else {
      run_benchmark_command(bench, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace boss::cli
