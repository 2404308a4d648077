#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "boss/dataset.hpp"
#include "boss/fixtures.hpp"
#include "boss/graph.hpp"
#include "cli.hpp"

using namespace boss;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

// A fresh directory per test case, removed on exit.
struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("boss_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& file) const { return (path / file).string(); }
};

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"search", "--data", "a.csv", "--bogus"}).code == cli::kExitUsage);
  CHECK(run({"search", "--data", "a.csv", "--cov", "b.csv"}).code == cli::kExitUsage);
  CHECK(run({"search", "--data", "a.csv", "--two-step", "maybe"}).code == cli::kExitUsage);
  CHECK(run({"simulate", "--nodes", "ten", "--out-data", "x.csv"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("runtime errors exit 1 with one diagnostic line") {
  const Run r = run({"search", "--data", "/nonexistent/missing.csv"});
  CHECK(r.code == cli::kExitRuntime);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);

  TempDir dir("runtime");
  write_file(dir / "bad.csv", "A,B\n1,2\n3\n");
  CHECK(run({"search", "--data", dir / "bad.csv"}).code == cli::kExitRuntime);
  write_file(dir / "bad.txt", "1 _| 2\n");
  CHECK(run({"sp", "--facts", dir / "bad.txt"}).code == cli::kExitRuntime);
  CHECK(run({"simulate", "--nodes", "4", "--avg-degree", "5", "--out-data", dir / "x.csv"}).code ==
        cli::kExitRuntime);
}

TEST_CASE("simulate is byte-for-byte deterministic") {
  TempDir dir("simulate");
  const std::vector<std::string> base{"simulate", "--nodes", "10", "--avg-degree", "4",
                                      "-n",       "100",     "--seed", "7"};
  auto a = base, b = base;
  a.insert(a.end(), {"--out-data", dir / "a.csv", "--out-graph", dir / "a.txt"});
  b.insert(b.end(), {"--out-data", dir / "b.csv", "--out-graph", dir / "b.txt"});
  REQUIRE(run(a).code == 0);
  REQUIRE(run(b).code == 0);
  CHECK(read_file(dir / "a.csv") == read_file(dir / "b.csv"));
  CHECK(read_file(dir / "a.txt") == read_file(dir / "b.txt"));
  const Dataset d = Dataset::from_csv(read_file(dir / "a.csv"));
  CHECK(d.num_rows() == 100);
  CHECK(parse_graph_text(read_file(dir / "a.txt")).edge_count() == 20);
}

TEST_CASE("config files are overridden by flags") {
  TempDir dir("config");
  write_file(dir / "sim.toml", "nodes = 6\navg_degree = 2\nsamples = 50\nseed = 3\n");
  REQUIRE(run({"simulate", "--config", dir / "sim.toml", "--out-data", dir / "a.csv"}).code == 0);
  CHECK(Dataset::from_csv(read_file(dir / "a.csv")).num_rows() == 50);
  REQUIRE(run({"simulate", "--config", dir / "sim.toml", "-n", "70", "--out-data", dir / "b.csv"})
              .code == 0);
  const Dataset b = Dataset::from_csv(read_file(dir / "b.csv"));
  CHECK(b.num_rows() == 70);
  CHECK(b.names().size() == 6);
  write_file(dir / "bad.toml", "nodes = 6\nwidgets = 2\n");
  CHECK(run({"simulate", "--config", dir / "bad.toml", "--out-data", dir / "c.csv"}).code != 0);
}

TEST_CASE("search recovers the worked example from simulated data") {
  TempDir dir("search");
  write_file(dir / "truth.txt", format_graph_text(worked_example_dag()));
  REQUIRE(run({"simulate", "--graph", dir / "truth.txt", "-n", "100000", "--seed", "1",
               "--out-data", dir / "data.csv"})
              .code == 0);
  const Run r = run({"search", "--data", dir / "data.csv", "--penalty", "2", "--seed", "4",
                     "--out", dir / "cpdag.txt", "--json", dir / "summary.json"});
  REQUIRE(r.code == 0);
  CHECK(parse_cpdag_text(read_file(dir / "cpdag.txt")) == dag_to_cpdag(worked_example_dag()));
  const auto j = nlohmann::json::parse(read_file(dir / "summary.json"));
  CHECK(j.contains("score"));
  CHECK(j["order"].size() == 4);
}

TEST_CASE("search and sp on fact lists") {
  TempDir dir("facts");
  write_file(dir / "c2.txt", format_fact_text(counterexample(2).facts));
  const Run s = run({"search", "--facts", dir / "c2.txt", "--score", "edge", "--seed", "1"});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("Graph Edges:") != std::string::npos);
  const Run p = run({"sp", "--facts", dir / "c2.txt", "--score", "edge"});
  REQUIRE(p.code == 0);
  CHECK(p.out.find("Graph Edges:") != std::string::npos);
}

TEST_CASE("counterexamples report per-fixture counts") {
  const Run r = run({"counterexamples", "--restarts", "20", "--fixture", "6"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("counterexample6:") != std::string::npos);
  CHECK(r.out.find("BOSS = 1, SP = 1") != std::string::npos);
  CHECK(run({"counterexamples", "--fixture", "7"}).code == cli::kExitUsage);
}

TEST_CASE("oracle study and benchmark tables") {
  TempDir dir("bench");
  const Run o = run({"oracle-study", "--nodes", "6", "--degrees", "1..3", "--json", dir / "o.json"});
  REQUIRE(o.code == 0);
  CHECK(o.out.find("AHR") != std::string::npos);
  CHECK(nlohmann::json::parse(read_file(dir / "o.json")).size() == 3);

  write_file(dir / "spec.toml", "nodes = 6\navg_degree = 2\nsource = dsep\nruns = 2\n"
                                "sweep = avg_degree\nvalues = 1,2\n");
  REQUIRE(run({"benchmark", "--spec", dir / "spec.toml", "--out", dir / "a.json"}).code == 0);
  REQUIRE(run({"benchmark", "--spec", dir / "spec.toml", "--out", dir / "b.json", "--threads",
               "2"})
              .code == 0);
  const auto a = nlohmann::json::parse(read_file(dir / "a.json"));
  const auto b = nlohmann::json::parse(read_file(dir / "b.json"));
  REQUIRE(a.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a[i]["ap"] == b[i]["ap"]);
    CHECK(a[i]["shd"] == b[i]["shd"]);
  }
  write_file(dir / "bad.toml", "runs = 0\n");
  CHECK(run({"benchmark", "--spec", dir / "bad.toml"}).code == cli::kExitRuntime);
}
