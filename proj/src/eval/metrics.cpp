#include "boss/metrics.hpp"

#include "boss/error.hpp"
#include "boss/rng.hpp"

namespace boss {

namespace {

double ratio(std::size_t num, std::size_t den, double undefined) {
  return den == 0 ? undefined : static_cast<double>(num) / static_cast<double>(den);
}

// Arrowhead into b on the pair (a, b).
bool arrow_into(const Cpdag& g, Node a, Node b) { return g.mark(a, b) == EdgeMark::forward; }

}  // namespace

MetricsRecord compare_cpdags(const Cpdag& estimated, const Cpdag& truth) {
  if (estimated.names() != truth.names()) {
    throw InputError("compared graphs have different node sets");
  }
  const int n = truth.size();
  std::size_t adj_tp = 0, adj_fp = 0, adj_fn = 0, non_adjacent = 0;
  std::size_t ah_tp = 0, ah_fp = 0, ah_fn = 0, shd = 0;
  for (Node a = 0; a < n; ++a) {
    for (Node b = a + 1; b < n; ++b) {
      const bool e = estimated.adjacent(a, b);
      const bool t = truth.adjacent(a, b);
      if (!t) ++non_adjacent;
      if (e && t) ++adj_tp;
      if (e && !t) ++adj_fp;
      if (!e && t) ++adj_fn;
      if (estimated.mark(a, b) != truth.mark(a, b)) ++shd;
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        const bool ea = arrow_into(estimated, x, y);
        const bool ta = arrow_into(truth, x, y);
        if (ea && ta) ++ah_tp;
        if (ea && !ta) ++ah_fp;
        if (!ea && ta) ++ah_fn;
      }
    }
  }
  MetricsRecord m;
  m.ap = ratio(adj_tp, adj_tp + adj_fp, 1.0);
  m.ar = ratio(adj_tp, adj_tp + adj_fn, 1.0);
  m.ahp = ratio(ah_tp, ah_tp + ah_fp, 1.0);
  m.ahr = ratio(ah_tp, ah_tp + ah_fn, 1.0);
  m.atpr = m.ar;
  m.afpr = ratio(adj_fp, non_adjacent, 0.0);
  m.shd = static_cast<double>(shd);
  return m;
}

UniqueCpdags unique_cpdag_count(const SourcePtr& source, Algorithm algorithm, int restarts,
                                std::uint64_t seed_base, const SearchConfig& config) {
  if (restarts < 1) throw InputError("restarts must be at least 1");
  UniqueCpdags out;
  if (algorithm == Algorithm::sp) {
    // Exhaustive search ignores the initial order, so every restart agrees.
    out.cpdags.insert(sp(source, config.score_kind, config.parent_method).best.cpdag);
  } else {
    for (int r = 0; r < restarts; ++r) {
      SearchConfig c = config;
      c.initial_order.clear();
      c.shuffle = true;
      c.seed = derive_seed(seed_base, static_cast<std::uint64_t>(r));
      out.cpdags.insert(boss_search(source, c).cpdag);
    }
  }
  out.count = out.cpdags.size();
  return out;
}

}  // namespace boss
