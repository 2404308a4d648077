#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "boss/metrics.hpp"
#include "boss/random_graph.hpp"
#include "boss/search.hpp"
#include "boss/sem.hpp"

namespace boss {

enum class SourceKind { dsep, bic, population_bic, fisher_z };

struct BenchmarkSpec {
  RandomGraphSpec graph;
  SimSpec sim;
  SourceKind source = SourceKind::bic;
  double penalty_discount = 2.0;
  double alpha = 0.01;
  double pseudo_sample_size = 1e6;
  Algorithm algorithm = Algorithm::boss;
  // Score kind follows the source; the initial order is always a seeded shuffle.
  SearchConfig search;
  int runs = 1;
  std::uint64_t seed_base = 0;
  // One row per value; an empty parameter gives a single row.
  std::string sweep_parameter;
  std::vector<double> sweep_values;
  int threads = 1;

  void validate() const;
};

// Names accepted as sweep parameters.
const std::vector<std::string>& sweep_parameters();

struct BenchmarkRow {
  std::string parameter;
  double value = 0.0;
  MetricsRecord mean;
  int completed = 0;
  std::vector<std::string> failures;
};

struct BenchmarkTable {
  std::string parameter;
  std::vector<BenchmarkRow> rows;
};

// Run k of row r draws every random choice from derive_seed(derive_seed(seed_base, r), k),
// so tables do not depend on the thread count.
BenchmarkTable run_benchmark(const BenchmarkSpec& spec);

// Fixed-width columns "AP AR AHP AHR SHD E"; a zero SHD prints as "-".
std::string format_table(const BenchmarkTable& table);
nlohmann::json table_to_json(const BenchmarkTable& table);

struct KeyValue {
  std::string key;
  std::string value;
  std::size_t line;
};

// Flat `key = value` lines; '#' starts a comment, values may be quoted.
// Throws ParseError with the line number on malformed or repeated keys.
std::vector<KeyValue> parse_key_values(std::string_view text);

// Keys: nodes, avg_degree, generator, sf_alpha, sf_beta, sf_delta_in,
// sf_delta_out, coef_low, coef_high, var_low, var_high, sample_size, source,
// penalty, alpha, pseudo_n, algorithm, two_step, left_only, escape_depth, cache,
// runs, seed, sweep, values, threads. `values` takes a comma list or an integer range "a..b".
BenchmarkSpec parse_benchmark_spec(std::string_view text);

// The d-separation oracle study: n nodes, one row per average degree.
BenchmarkSpec oracle_study_spec(int nodes, std::vector<double> degrees, int runs,
                                std::uint64_t seed);

// Parses "a..b" or "a,b,c" into numbers.
std::vector<double> parse_value_list(std::string_view text);

}  // namespace boss
