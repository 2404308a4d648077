#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <set>

#include "boss/error.hpp"
#include "boss/search.hpp"

namespace boss {

SpResult sp(SourcePtr source, ScoreKind kind, ParentMethod method, int cap) {
  const auto t0 = std::chrono::steady_clock::now();
  if (!source) throw InputError("missing source");
  const int n = source->num_variables();
  if (n > cap) {
    throw InputError("exhaustive search is limited to " + std::to_string(cap) + " variables, got " +
                     std::to_string(n));
  }
  if (kind == ScoreKind::bic && !source->has_score()) {
    throw InputError(source->describe() + " cannot supply BIC scores");
  }
  CachedSource cached(source);

  // Parents and local score of v depend only on the prefix set, indexed by bitmask.
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::optional<NodeSet>> parents(static_cast<std::size_t>(n) * masks);
  std::vector<double> local(parents.size(), 0.0);
  const auto lookup = [&](Node v, std::size_t mask) -> std::size_t {
    const std::size_t idx = static_cast<std::size_t>(v) * masks + mask;
    if (!parents[idx]) {
      NodeSet prefix;
      for (Node u = 0; u < n; ++u) {
        if (mask >> u & 1) prefix.push_back(u);
      }
      parents[idx] = prefix_parents(cached, method, v, prefix);
      local[idx] = kind == ScoreKind::edge_count ? static_cast<double>(parents[idx]->size())
                                                 : cached.local_score(v, *parents[idx]);
    }
    return idx;
  };

  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  SpResult out;
  std::set<std::vector<NodeSet>> dags;
  double best = 0.0;
  bool first = true;
  std::vector<double> by_node(n);
  std::vector<NodeSet> pa(n);
  do {
    std::size_t mask = 0;
    for (Node v : order) {
      const std::size_t idx = lookup(v, mask);
      by_node[v] = local[idx];
      pa[v] = *parents[idx];
      mask |= std::size_t{1} << v;
    }
    double s = 0.0;
    for (double x : by_node) s += x;
    if (first || improves(s, best)) {
      first = false;
      best = s;
      out.minimizing_orders.clear();
      dags.clear();
      out.best.final_order = order;
    } else if (improves(best, s)) {
      continue;
    }
    out.minimizing_orders.push_back(order);
    dags.insert(pa);
  } while (std::next_permutation(order.begin(), order.end()));

  std::set<Cpdag> cpdags;
  for (const auto& p : dags) cpdags.insert(dag_to_cpdag(Dag::from_parents(source->names(), p)));
  out.minimizing_cpdags.assign(cpdags.begin(), cpdags.end());

  std::size_t mask = 0;
  std::vector<NodeSet> best_parents(n);
  for (Node v : out.best.final_order) {
    best_parents[v] = *parents[lookup(v, mask)];
    mask |= std::size_t{1} << v;
  }
  out.best.dag = Dag::from_parents(source->names(), std::move(best_parents));
  out.best.cpdag = dag_to_cpdag(out.best.dag);
  out.best.final_score = best;
  out.best.score_trace = {best};
  out.best.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace boss
