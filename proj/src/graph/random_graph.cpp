#include "boss/random_graph.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "boss/error.hpp"
#include "boss/rng.hpp"

namespace boss {

void RandomGraphSpec::validate() const {
  if (num_nodes < 1) throw InputError("number of nodes must be positive");
  if (generator == GraphGenerator::erdos_renyi_forward) {
    if (!(avg_degree >= 0.0)) throw InputError("average degree must be nonnegative");
    if (avg_degree > num_nodes - 1) {
      throw InputError("average degree " + std::to_string(avg_degree) + " exceeds n - 1 = " +
                       std::to_string(num_nodes - 1));
    }
  } else {
    const auto& p = scale_free;
    if (p.alpha < 0 || p.beta < 0 || p.alpha + p.beta > 1.0) {
      throw InputError("scale-free alpha and beta must be nonnegative with alpha + beta <= 1");
    }
    if (p.beta >= 1.0) throw InputError("scale-free beta must be below 1 for the graph to grow");
    if (p.delta_in < 0 || p.delta_out < 0) throw InputError("scale-free deltas must be >= 0");
  }
}

namespace {

Dag erdos_renyi_forward(const RandomGraphSpec& spec, Rng& rng) {
  const int n = spec.num_nodes;
  const auto edges = static_cast<std::size_t>(std::llround(n * spec.avg_degree / 2.0));
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  if (edges > pairs.size()) throw InputError("requested edge count is infeasible");
  // Partial Fisher-Yates: the first `edges` slots are a uniform sample.
  for (std::size_t i = 0; i < edges; ++i) {
    std::swap(pairs[i], pairs[i + rng.index(pairs.size() - i)]);
  }
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(relabel);

  std::vector<NodeSet> parents(n);
  for (std::size_t i = 0; i < edges; ++i) {
    auto [lo, hi] = pairs[i];
    parents[relabel[hi]].push_back(relabel[lo]);
  }
  return Dag::from_parents(default_names(n), std::move(parents));
}

// Picks an existing node with probability proportional to degree + delta.
int preferential_pick(const std::vector<int>& degree, double delta, Rng& rng) {
  double total = 0.0;
  for (int d : degree) total += d + delta;
  if (total <= 0.0) return static_cast<int>(rng.index(degree.size()));
  double r = rng.uniform01() * total;
  for (std::size_t i = 0; i < degree.size(); ++i) {
    r -= degree[i] + delta;
    if (r < 0.0) return static_cast<int>(i);
  }
  return static_cast<int>(degree.size()) - 1;
}

Dag scale_free(const RandomGraphSpec& spec, Rng& rng) {
  const int n = spec.num_nodes;
  const auto& p = spec.scale_free;
  std::vector<int> in_degree{0};
  std::vector<int> out_degree{0};
  std::set<std::pair<int, int>> links;  // (earlier, later) in creation order
  auto link = [&](int from, int to) {
    ++out_degree[from];
    ++in_degree[to];
    if (from != to) links.emplace(std::min(from, to), std::max(from, to));
  };
  while (static_cast<int>(in_degree.size()) < n) {
    const double r = rng.uniform01();
    if (r < p.alpha) {
      const int w = preferential_pick(in_degree, p.delta_in, rng);
      in_degree.push_back(0);
      out_degree.push_back(0);
      link(static_cast<int>(in_degree.size()) - 1, w);
    } else if (r < p.alpha + p.beta) {
      const int v = preferential_pick(out_degree, p.delta_out, rng);
      const int w = preferential_pick(in_degree, p.delta_in, rng);
      link(v, w);
    } else {
      const int v = preferential_pick(out_degree, p.delta_out, rng);
      in_degree.push_back(0);
      out_degree.push_back(0);
      link(v, static_cast<int>(in_degree.size()) - 1);
    }
  }
  std::vector<int> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  rng.shuffle(relabel);
  std::vector<NodeSet> parents(n);
  for (auto [a, b] : links) parents[relabel[b]].push_back(relabel[a]);
  return Dag::from_parents(default_names(n), std::move(parents));
}

}  // namespace

Dag generate_dag(const RandomGraphSpec& spec) {
  spec.validate();
  Rng rng(derive_seed(spec.seed, "graph"));
  if (spec.generator == GraphGenerator::scale_free) return scale_free(spec, rng);
  return erdos_renyi_forward(spec, rng);
}

}  // namespace boss
