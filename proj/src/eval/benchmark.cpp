#include "boss/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <thread>

#include "boss/dataset.hpp"
#include "boss/error.hpp"
#include "boss/rng.hpp"

namespace boss {

const std::vector<std::string>& sweep_parameters() {
  static const std::vector<std::string> names{"nodes",   "avg_degree", "sample_size", "penalty",
                                              "coef_low", "coef_high", "alpha"};
  return names;
}

namespace {

void apply_parameter(BenchmarkSpec& s, const std::string& name, double value) {
  if (name == "nodes") {
    s.graph.num_nodes = static_cast<int>(std::lround(value));
  } else if (name == "avg_degree") {
    s.graph.avg_degree = value;
  } else if (name == "sample_size") {
    s.sim.sample_size = static_cast<int>(std::lround(value));
  } else if (name == "penalty") {
    s.penalty_discount = value;
  } else if (name == "coef_low") {
    s.sim.coef_low = value;
  } else if (name == "coef_high") {
    s.sim.coef_high = value;
  } else if (name == "alpha") {
    s.alpha = value;
  } else {
    throw InputError("unknown sweep parameter '" + name + "'");
  }
}

std::vector<BenchmarkSpec> expand_rows(const BenchmarkSpec& spec) {
  if (spec.sweep_parameter.empty()) return {spec};
  std::vector<BenchmarkSpec> rows;
  for (double v : spec.sweep_values) {
    BenchmarkSpec row = spec;
    apply_parameter(row, spec.sweep_parameter, v);
    rows.push_back(std::move(row));
  }
  return rows;
}

void validate_row(const BenchmarkSpec& s) {
  s.graph.validate();
  s.search.validate();
  if (s.source != SourceKind::dsep) s.sim.validate();
  if (!(s.penalty_discount > 0.0)) throw InputError("penalty discount must be positive");
  if (!(s.alpha > 0.0 && s.alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  if (!(s.pseudo_sample_size >= 1.0)) throw InputError("pseudo sample size must be at least 1");
  if (s.algorithm == Algorithm::sp && s.graph.num_nodes > kSpVariableCap) {
    throw InputError("exhaustive search is limited to " + std::to_string(kSpVariableCap) +
                     " variables");
  }
}

MetricsRecord run_once(const BenchmarkSpec& s, std::uint64_t seed) {
  RandomGraphSpec gs = s.graph;
  gs.seed = seed;
  const Dag truth = generate_dag(gs);

  SourcePtr source;
  ScoreKind kind = ScoreKind::edge_count;
  if (s.source == SourceKind::dsep) {
    source = dsep_oracle(truth);
  } else {
    SimSpec sim = s.sim;
    sim.seed = seed;
    const LinearSem sem = parameterize_sem(truth, sim);
    if (s.source == SourceKind::population_bic) {
      source = population_bic(truth.names(), population_covariance(sem), s.pseudo_sample_size,
                              s.penalty_discount);
      kind = ScoreKind::bic;
    } else {
      const Dataset data = simulate_data(sem, sim.sample_size, seed);
      if (s.source == SourceKind::bic) {
        source = dataset_bic(data, s.penalty_discount);
        kind = ScoreKind::bic;
      } else {
        source = fisher_z(data, s.alpha);
      }
    }
  }

  SearchResult r;
  if (s.algorithm == Algorithm::sp) {
    r = sp(source, kind, s.search.parent_method).best;
  } else {
    SearchConfig c = s.search;
    c.score_kind = kind;
    c.initial_order.clear();
    c.shuffle = true;
    c.seed = derive_seed(seed, "search");
    r = boss_search(source, c);
  }
  MetricsRecord m = compare_cpdags(r.cpdag, dag_to_cpdag(truth));
  m.elapsed_seconds = r.elapsed_seconds;
  return m;
}

}  // namespace

void BenchmarkSpec::validate() const {
  if (runs < 1) throw InputError("runs must be at least 1");
  if (threads < 1) throw InputError("threads must be at least 1");
  if (!sweep_parameter.empty()) {
    const auto& names = sweep_parameters();
    if (std::find(names.begin(), names.end(), sweep_parameter) == names.end()) {
      throw InputError("unknown sweep parameter '" + sweep_parameter + "'");
    }
    if (sweep_values.empty()) throw InputError("sweep needs at least one value");
  }
  for (const auto& row : expand_rows(*this)) validate_row(row);
}

BenchmarkTable run_benchmark(const BenchmarkSpec& spec) {
  spec.validate();
  const auto rows = expand_rows(spec);
  const std::size_t runs = static_cast<std::size_t>(spec.runs);
  const std::size_t tasks = rows.size() * runs;
  std::vector<std::optional<MetricsRecord>> results(tasks);
  std::vector<std::string> errors(tasks);

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < tasks;) {
      const std::size_t row = t / runs;
      const std::size_t run = t % runs;
      const std::uint64_t seed = derive_seed(derive_seed(spec.seed_base, row), run);
      try {
        results[t] = run_once(rows[row], seed);
      } catch (const std::exception& e) {
        errors[t] = "run " + std::to_string(run) + ": " + e.what();
      }
    }
  };
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(spec.threads), tasks);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BenchmarkTable table;
  table.parameter = spec.sweep_parameter;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    BenchmarkRow row;
    row.parameter = spec.sweep_parameter;
    row.value = spec.sweep_parameter.empty() ? 0.0 : spec.sweep_values[r];
    MetricsRecord sum{0, 0, 0, 0, 0, 0, 0, 0};
    for (std::size_t k = 0; k < runs; ++k) {
      const std::size_t t = r * runs + k;
      if (!results[t]) {
        row.failures.push_back(errors[t]);
        continue;
      }
      const MetricsRecord& m = *results[t];
      sum.ap += m.ap;
      sum.ar += m.ar;
      sum.ahp += m.ahp;
      sum.ahr += m.ahr;
      sum.atpr += m.atpr;
      sum.afpr += m.afpr;
      sum.shd += m.shd;
      sum.elapsed_seconds += m.elapsed_seconds;
      ++row.completed;
    }
    if (row.completed > 0) {
      const double c = row.completed;
      row.mean = MetricsRecord{sum.ap / c,   sum.ar / c,   sum.ahp / c, sum.ahr / c,
                               sum.atpr / c, sum.afpr / c, sum.shd / c, sum.elapsed_seconds / c};
    } else {
      const double nan = std::nan("");
      row.mean = MetricsRecord{nan, nan, nan, nan, nan, nan, nan, nan};
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_table(const BenchmarkTable& table) {
  const std::string label = table.parameter.empty() ? "run" : table.parameter;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%12s%6s%6s%6s%6s%7s%6s\n", label.c_str(), "AP", "AR", "AHP",
                "AHR", "SHD", "E");
  std::string out = buf;
  for (const auto& row : table.rows) {
    char shd[16];
    if (row.mean.shd == 0.0) {
      std::snprintf(shd, sizeof shd, "%7s", "-");
    } else {
      std::snprintf(shd, sizeof shd, "%7.2f", row.mean.shd);
    }
    std::snprintf(buf, sizeof buf, "%12.2f%6.2f%6.2f%6.2f%6.2f%s%6.2f", row.value, row.mean.ap,
                  row.mean.ar, row.mean.ahp, row.mean.ahr, shd, row.mean.elapsed_seconds);
    out += buf;
    if (!row.failures.empty()) out += "  (" + std::to_string(row.failures.size()) + " failed)";
    out += '\n';
  }
  return out;
}

nlohmann::json table_to_json(const BenchmarkTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    const auto num = [](double v) { return std::isnan(v) ? nlohmann::json() : nlohmann::json(v); };
    nlohmann::json j{{"ap", num(row.mean.ap)},
                     {"ar", num(row.mean.ar)},
                     {"ahp", num(row.mean.ahp)},
                     {"ahr", num(row.mean.ahr)},
                     {"atpr", num(row.mean.atpr)},
                     {"afpr", num(row.mean.afpr)},
                     {"shd", num(row.mean.shd)},
                     {"elapsed", num(row.mean.elapsed_seconds)},
                     {"completed", row.completed},
                     {"failures", row.failures}};
    if (!row.parameter.empty()) j[row.parameter] = row.value;
    rows.push_back(std::move(j));
  }
  return rows;
}

// ---------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double to_number(const std::string& text, std::size_t line, const std::string& key) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || !std::isfinite(v)) {
    throw ParseError(line, "'" + key + "' expects a number, got '" + text + "'");
  }
  return v;
}

int to_int(const std::string& text, std::size_t line, const std::string& key) {
  int v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end) {
    throw ParseError(line, "'" + key + "' expects an integer, got '" + text + "'");
  }
  return v;
}

bool to_bool(const std::string& text, std::size_t line, const std::string& key) {
  if (text == "true" || text == "on" || text == "1") return true;
  if (text == "false" || text == "off" || text == "0") return false;
  throw ParseError(line, "'" + key + "' expects true/false or on/off, got '" + text + "'");
}

}  // namespace

std::vector<double> parse_value_list(std::string_view text) {
  const std::string t = trim(text);
  std::vector<double> out;
  if (const auto dots = t.find(".."); dots != std::string::npos) {
    const std::string a = trim(std::string_view(t).substr(0, dots));
    const std::string b = trim(std::string_view(t).substr(dots + 2));
    int lo = 0, hi = 0;
    try {
      lo = to_int(a, 0, "range");
      hi = to_int(b, 0, "range");
    } catch (const ParseError&) {
      throw InputError("malformed range '" + t + "'");
    }
    if (lo > hi) throw InputError("empty range '" + t + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t comma = t.find(',', start);
    if (comma == std::string::npos) comma = t.size();
    const std::string item = trim(std::string_view(t).substr(start, comma - start));
    try {
      out.push_back(to_number(item, 0, "values"));
    } catch (const ParseError&) {
      throw InputError("malformed value '" + item + "'");
    }
    start = comma + 1;
  }
  return out;
}

std::vector<KeyValue> parse_key_values(std::string_view text) {
  std::vector<KeyValue> out;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ParseError(line_no, "missing key");
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    for (const auto& kv : out) {
      if (kv.key == key) throw ParseError(line_no, "repeated key '" + key + "'");
    }
    out.push_back(KeyValue{std::move(key), std::move(value), line_no});
  }
  return out;
}

BenchmarkSpec parse_benchmark_spec(std::string_view text) {
  BenchmarkSpec s;
  for (const auto& [key, value, line] : parse_key_values(text)) {
    if (key == "nodes") {
      s.graph.num_nodes = to_int(value, line, key);
    } else if (key == "avg_degree") {
      s.graph.avg_degree = to_number(value, line, key);
    } else if (key == "generator") {
      if (value == "erdos_renyi") {
        s.graph.generator = GraphGenerator::erdos_renyi_forward;
      } else if (value == "scale_free") {
        s.graph.generator = GraphGenerator::scale_free;
      } else {
        throw ParseError(line, "generator must be erdos_renyi or scale_free");
      }
    } else if (key == "sf_alpha") {
      s.graph.scale_free.alpha = to_number(value, line, key);
    } else if (key == "sf_beta") {
      s.graph.scale_free.beta = to_number(value, line, key);
    } else if (key == "sf_delta_in") {
      s.graph.scale_free.delta_in = to_number(value, line, key);
    } else if (key == "sf_delta_out") {
      s.graph.scale_free.delta_out = to_number(value, line, key);
    } else if (key == "coef_low") {
      s.sim.coef_low = to_number(value, line, key);
    } else if (key == "coef_high") {
      s.sim.coef_high = to_number(value, line, key);
    } else if (key == "var_low") {
      s.sim.var_low = to_number(value, line, key);
    } else if (key == "var_high") {
      s.sim.var_high = to_number(value, line, key);
    } else if (key == "sample_size") {
      s.sim.sample_size = to_int(value, line, key);
    } else if (key == "source") {
      if (value == "dsep") {
        s.source = SourceKind::dsep;
      } else if (value == "bic") {
        s.source = SourceKind::bic;
      } else if (value == "population_bic") {
        s.source = SourceKind::population_bic;
      } else if (value == "fisher_z") {
        s.source = SourceKind::fisher_z;
      } else {
        throw ParseError(line, "source must be dsep, bic, population_bic or fisher_z");
      }
    } else if (key == "penalty") {
      s.penalty_discount = to_number(value, line, key);
    } else if (key == "alpha") {
      s.alpha = to_number(value, line, key);
    } else if (key == "pseudo_n") {
      s.pseudo_sample_size = to_number(value, line, key);
    } else if (key == "algorithm") {
      if (value == "boss") {
        s.algorithm = Algorithm::boss;
      } else if (value == "sp") {
        s.algorithm = Algorithm::sp;
      } else {
        throw ParseError(line, "algorithm must be boss or sp");
      }
    } else if (key == "two_step") {
      s.search.use_two_step = to_bool(value, line, key);
    } else if (key == "left_only") {
      s.search.move_direction =
          to_bool(value, line, key) ? MoveDirection::left_only : MoveDirection::both;
    } else if (key == "escape_depth") {
      s.search.escape_depth = to_int(value, line, key);
    } else if (key == "cache") {
      s.search.caching = to_bool(value, line, key);
    } else if (key == "runs") {
      s.runs = to_int(value, line, key);
    } else if (key == "seed") {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
      if (ec != std::errc() || p != value.data() + value.size()) {
        throw ParseError(line, "'seed' expects a nonnegative integer");
      }
      s.seed_base = v;
    } else if (key == "sweep") {
      s.sweep_parameter = value;
    } else if (key == "values") {
      try {
        s.sweep_values = parse_value_list(value);
      } catch (const InputError& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "threads") {
      s.threads = to_int(value, line, key);
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  return s;
}

BenchmarkSpec oracle_study_spec(int nodes, std::vector<double> degrees, int runs,
                                std::uint64_t seed) {
  BenchmarkSpec s;
  s.graph.num_nodes = nodes;
  s.source = SourceKind::dsep;
  s.algorithm = Algorithm::boss;
  s.runs = runs;
  s.seed_base = seed;
  s.sweep_parameter = "avg_degree";
  s.sweep_values = std::move(degrees);
  return s;
}

}  // namespace boss
