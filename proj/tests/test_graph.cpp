#include <doctest.h>

#include <cmath>

#include "boss/ci_facts.hpp"
#include "boss/error.hpp"
#include "boss/fixtures.hpp"
#include "boss/graph.hpp"
#include "boss/random_graph.hpp"
#include "boss/rng.hpp"
#include "oracles.hpp"

using namespace boss;

namespace {

Dag collider() {
  Dag g(std::vector<std::string>{"A", "B", "C"});
  g.add_edge("A", "C");
  g.add_edge("B", "C");
  return g;
}

}  // namespace

TEST_CASE("dag rejects cycles, self loops and bad indices") {
  Dag g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK_THROWS_AS(g.add_edge(2, 0), InputError);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 7), InputError);
  CHECK_THROWS_AS(Dag::from_parents(default_names(2), {{1}, {0}}), InputError);
  CHECK_THROWS_AS(g.index_of("nope"), InputError);
  CHECK(g.edge_count() == 2);
  CHECK(g.reaches(0, 2));
  CHECK_FALSE(g.reaches(2, 0));
}

TEST_CASE("topological order respects every edge") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const Dag g = oracle::random_dag(8, 0.4, rng);
    const auto order = g.topological_order();
    std::vector<int> pos(g.size());
    for (int i = 0; i < g.size(); ++i) pos[order[i]] = i;
    for (auto [a, b] : g.edges()) CHECK(pos[a] < pos[b]);
  }
}

TEST_CASE("d-separation on the worked example") {
  const Dag g = worked_example_dag();
  CHECK(d_separated(g, "X1", "X4", {"X2", "X3"}));
  CHECK(d_separated(g, "X2", "X3", {"X1"}));
  CHECK_FALSE(d_separated(g, "X2", "X3", {"X1", "X4"}));
  CHECK_FALSE(d_separated(g, "X1", "X4", {}));
}

TEST_CASE("d-separation rejects malformed queries") {
  const Dag g = worked_example_dag();
  CHECK_THROWS_AS(d_separated(g, 0, 0, {}), InputError);
  CHECK_THROWS_AS(d_separated(g, 0, 1, {1}), InputError);
  CHECK_THROWS_AS(d_separated(g, "X1", "X9", {}), InputError);
}

TEST_CASE("d-separation agrees with the moralization oracle") {
  Rng rng(2024);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.index(7));
    const Dag g = oracle::random_dag(n, rng.uniform(0.1, 0.7), rng);
    const Node x = static_cast<Node>(rng.index(n));
    Node y = static_cast<Node>(rng.index(n - 1));
    if (y >= x) ++y;
    NodeSet z;
    for (Node v = 0; v < n; ++v) {
      if (v != x && v != y && rng.coin()) z.push_back(v);
    }
    CHECK(d_separated(g, x, y, z) == oracle::moral_separated(g, x, y, z));
    ++checked;
  }
  CHECK(checked == 1000);
}

TEST_CASE("cpdag of small fixtures") {
  const Cpdag we = dag_to_cpdag(worked_example_dag());
  CHECK(we.mark(1, 3) == EdgeMark::forward);
  CHECK(we.mark(2, 3) == EdgeMark::forward);
  CHECK(we.mark(0, 1) == EdgeMark::undirected);
  CHECK(we.mark(0, 2) == EdgeMark::undirected);
  CHECK(we.edge_count() == 4);

  Dag single(2);
  single.add_edge(0, 1);
  CHECK(dag_to_cpdag(single).mark(0, 1) == EdgeMark::undirected);

  const Cpdag c = dag_to_cpdag(collider());
  CHECK(c.mark(0, 2) == EdgeMark::forward);
  CHECK(c.mark(1, 2) == EdgeMark::forward);
  CHECK(c.mark(2, 0) == EdgeMark::backward);
}

TEST_CASE("cpdag matches the brute-force equivalence class consensus") {
  Rng rng(5);
  for (int t = 0; t < 150; ++t) {
    const int n = 1 + static_cast<int>(rng.index(5));
    const Dag g = oracle::random_dag(n, rng.uniform(0.2, 0.9), rng);
    CHECK(dag_to_cpdag(g) == oracle::mec_consensus(g));
  }
}

TEST_CASE("equal cpdags exactly when separation statements agree") {
  Rng rng(99);
  int same = 0;
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + static_cast<int>(rng.index(3));
    const Dag a = oracle::random_dag(n, 0.6, rng);
    const Dag b = oracle::random_dag(n, 0.6, rng);
    const bool equivalent = oracle::separation_profile(a) == oracle::separation_profile(b);
    same += equivalent;
    CHECK(equivalent == (dag_to_cpdag(a) == dag_to_cpdag(b)));
  }
  CHECK(same > 0);
}

TEST_CASE("erdos-renyi generator has exact edge counts and is reproducible") {
  for (int n : {5, 10, 30}) {
    for (double d : {0.0, 1.0, 2.5, 4.0}) {
      if (d > n - 1) continue;
      RandomGraphSpec s;
      s.num_nodes = n;
      s.avg_degree = d;
      s.seed = 17;
      const Dag g = generate_dag(s);
      CHECK(g.size() == n);
      CHECK(g.edge_count() == static_cast<std::size_t>(std::lround(n * d / 2)));
      CHECK(g.topological_order().size() == static_cast<std::size_t>(n));
      CHECK(generate_dag(s) == g);
    }
  }
  RandomGraphSpec a, b;
  a.num_nodes = b.num_nodes = 20;
  a.avg_degree = b.avg_degree = 4;
  a.seed = 1;
  b.seed = 2;
  CHECK_FALSE(generate_dag(a) == generate_dag(b));
}

TEST_CASE("complete graph at the maximal degree") {
  RandomGraphSpec s;
  s.num_nodes = 10;
  s.avg_degree = 9;
  CHECK(generate_dag(s).edge_count() == 45);
}

TEST_CASE("scale-free generator is acyclic and reproducible") {
  RandomGraphSpec s;
  s.num_nodes = 50;
  s.generator = GraphGenerator::scale_free;
  s.seed = 3;
  const Dag g = generate_dag(s);
  CHECK(g.size() == 50);
  CHECK(g.edge_count() > 0);
  CHECK(g.topological_order().size() == 50u);
  CHECK(generate_dag(s) == g);
}

TEST_CASE("infeasible graph specs are rejected") {
  RandomGraphSpec s;
  s.num_nodes = 4;
  s.avg_degree = 3.5;
  CHECK_THROWS_AS(generate_dag(s), InputError);
  s.avg_degree = -1;
  CHECK_THROWS_AS(generate_dag(s), InputError);
  s = RandomGraphSpec{};
  s.num_nodes = 0;
  CHECK_THROWS_AS(generate_dag(s), InputError);
  s = RandomGraphSpec{};
  s.generator = GraphGenerator::scale_free;
  s.scale_free.alpha = 0.7;
  s.scale_free.beta = 0.5;
  CHECK_THROWS_AS(generate_dag(s), InputError);
  s.scale_free.alpha = 0.4;
  s.scale_free.delta_in = -1;
  CHECK_THROWS_AS(generate_dag(s), InputError);
}

TEST_CASE("graph text round trips") {
  const Dag g = worked_example_dag();
  const std::string text = format_graph_text(g);
  CHECK(text.find("1. X1 --> X2") != std::string::npos);
  CHECK(parse_graph_text(text) == g);
  const Cpdag c = dag_to_cpdag(g);
  const std::string ctext = format_graph_text(c);
  CHECK(ctext.find("X1 --- X2") != std::string::npos);
  CHECK(parse_cpdag_text(ctext) == c);
}

TEST_CASE("graph text errors name the line") {
  const std::string cyclic = "Graph Nodes:\nA;B\n\nGraph Edges:\n1. A --> B\n2. B --> A\n";
  try {
    parse_graph_text(cyclic);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 6);
  }
  CHECK_THROWS_AS(parse_graph_text("Graph Nodes:\nA;B\n\nGraph Edges:\n1. A -> C\n"), ParseError);
  CHECK_THROWS_AS(parse_graph_text("Graph Nodes:\nA;B\n\nGraph Edges:\n1. A --- B\n"), ParseError);
}

TEST_CASE("fact lists are symmetric and round trip") {
  const FactList f = parse_fact_text("1 _||_ 5 | 2, 3\n2 _||_ 4\n");
  CHECK(f.size() == 5);
  CHECK(f.contains(0, 4, {1, 2}));
  CHECK(f.contains(4, 0, {1, 2}));
  CHECK(f.contains(1, 3, {}));
  CHECK_FALSE(f.contains(0, 4, {}));
  const FactList again = parse_fact_text(format_fact_text(f), f.names());
  CHECK(again.facts() == f.facts());
}

TEST_CASE("malformed fact text is rejected with its line") {
  try {
    parse_fact_text("1 _||_ 2\n1 _| 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_fact_text("1 _||_ 1\n"), ParseError);
}

TEST_CASE("counterexample 3 lists its named fact") {
  const CiFixture f = counterexample(3);
  CHECK(f.facts.contains(0, 4, {1, 2}));
}
