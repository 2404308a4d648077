#include "boss/fixtures.hpp"

#include "boss/error.hpp"

namespace boss {

Dag worked_example_dag() {
  return parse_graph_text(
      "Graph Nodes:\n"
      "X1;X2;X3;X4\n"
      "\n"
      "Graph Edges:\n"
      "1. X1 --> X2\n"
      "2. X1 --> X3\n"
      "3. X2 --> X4\n"
      "4. X3 --> X4\n");
}

namespace {

Dag path_cancel_dag() {
  Dag g(std::vector<std::string>{"1", "2", "3", "4"});
  g.add_edge("1", "2");
  g.add_edge("2", "3");
  g.add_edge("3", "4");
  g.add_edge("1", "4");
  return g;
}

struct FactListing {
  const char* description;
  const char* facts;
};

// Verbatim listings; the variable set is 1..max token.
constexpr FactListing kCounterexamples[] = {
    {"4-node path cancellation",
     "1 _||_ 3 | 2\n"
     "2 _||_ 4 | 1, 3\n"
     "1 _||_ 4\n"},
    {"SMR does not imply restricted faithfulness",
     "1 _||_ 3 | 2\n"
     "2 _||_ 4 | 1, 3\n"
     "1 _||_ 2 | 4\n"},
    {"TSP does not imply faithfulness",
     "1 _||_ 5 | 2, 3\n"
     "2 _||_ 4 | 1, 3\n"
     "3 _||_ 5 | 1, 2, 4\n"
     "1 _||_ 4 | 2, 3, 5\n"
     "1 _||_ 4 | 2, 3\n"},
    {"ESP does not imply TSP",
     "1 _||_ 2 | 4\n"
     "1 _||_ 3 | 2\n"
     "2 _||_ 4 | 1, 3\n"},
    {"SMR does not imply ESP",
     "1 _||_ 3 | 2\n"
     "2 _||_ 4 | 1, 3\n"
     "4 _||_ 5\n"},
    {"TSP does not imply orientation faithfulness",
     "1 _||_ 3\n"
     "1 _||_ 5 | 2, 3, 4\n"
     "4 _||_ 6 | 1, 2, 3, 5\n"
     "1 _||_ 3 | 2, 4, 5, 6\n"},
};

}  // namespace

LinearSem path_cancel_sem() {
  Dag g = path_cancel_dag();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(4, 4);
  b(1, 0) = 0.5;
  b(2, 1) = 0.5;
  b(3, 2) = 0.5;
  b(3, 0) = -0.125;
  Eigen::VectorXd omega = standardized_error_variances(g, b);
  return LinearSem(std::move(g), std::move(b), std::move(omega));
}

CiFixture counterexample(int k) {
  if (k < 1 || k > 6) throw InputError("counterexample index must be in 1..6");
  const auto& listing = kCounterexamples[k - 1];
  CiFixture f{"counterexample" + std::to_string(k), listing.description,
              parse_fact_text(listing.facts), std::nullopt};
  if (k == 1) f.truth = path_cancel_dag();
  return f;
}

Fixtures canonical_fixtures() {
  Fixtures out{worked_example_dag(), path_cancel_sem(), {}};
  for (int k = 1; k <= 6; ++k) out.counterexamples.push_back(counterexample(k));
  return out;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names{"workedExample", "pathCancel"};
  for (int k = 1; k <= 6; ++k) names.push_back("counterexample" + std::to_string(k));
  return names;
}

CiFixture ci_fixture(std::string_view name) {
  const std::string prefix = "counterexample";
  if (name.substr(0, prefix.size()) == prefix && name.size() == prefix.size() + 1) {
    const char d = name.back();
    if (d >= '1' && d <= '6') return counterexample(d - '0');
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace boss
