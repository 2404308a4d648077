#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boss/ci_facts.hpp"
#include "boss/graph.hpp"
#include "boss/sem.hpp"

namespace boss {

// A conditional-independence fixture: an explicit fact list, plus the
// generating DAG when one is known.
struct CiFixture {
  std::string name;
  std::string description;
  FactList facts;
  std::optional<Dag> truth;
};

// X1 --> X2, X1 --> X3, X2 --> X4, X3 --> X4
Dag worked_example_dag();

// 1 --> 2 --> 3 --> 4 with coefficients 0.5 and a direct 1 --> 4 edge of
// -0.125, standardized so every variable has unit variance. The direct and
// indirect effects of 1 on 4 cancel exactly.
LinearSem path_cancel_sem();

// The six unfaithful fact lists, k = 1..6.
CiFixture counterexample(int k);

struct Fixtures {
  Dag worked_example;
  LinearSem path_cancel;
  std::vector<CiFixture> counterexamples;
};

Fixtures canonical_fixtures();

// Lookup of "counterexample1".."counterexample6"; throws InputError otherwise.
CiFixture ci_fixture(std::string_view name);
// "workedExample", "pathCancel", "counterexample1".."counterexample6"
std::vector<std::string> fixture_names();

}  // namespace boss
