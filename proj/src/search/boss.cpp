#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>

#include "boss/error.hpp"
#include "boss/rng.hpp"
#include "boss/search.hpp"

namespace boss {

void SearchConfig::validate() const {
  if (max_outer_iterations < 1) throw InputError("max outer iterations must be at least 1");
  if (escape_depth < 0) throw InputError("escape depth must be non-negative");
}

bool improves(double a, double b) { return a < b - 1e-9 * std::max(1.0, std::abs(b)); }

bool best_move(OrderState& state, Node v, MoveDirection direction, TiePolicy ties) {
  const int start = state.position(v);
  const double original = state.score();
  const int last = direction == MoveDirection::both ? state.size() - 1 : start;
  double best = original;
  int best_pos = start;
  bool seeded = ties == TiePolicy::keep_original;
  for (int p = last; p >= 0; --p) {
    if (p == start && seeded) continue;
    state.relocate(v, p);
    if (!seeded || improves(state.score(), best)) {
      seeded = true;
      best = state.score();
      best_pos = p;
    }
  }
  state.relocate(v, best_pos);
  return improves(state.score(), original);
}

namespace {

// One pass of best_move over the variables in index order; true if the pass
// as a whole strictly lowered the score.
bool sweep(OrderState& state, MoveDirection direction, TiePolicy ties, std::size_t* moves,
           std::vector<double>* trace) {
  const double before = state.score();
  for (Node v = 0; v < state.size(); ++v) {
    const int from = state.position(v);
    best_move(state, v, direction, ties);
    if (state.position(v) == from) continue;
    if (moves) ++*moves;
    if (trace) trace->push_back(state.score());
  }
  return improves(state.score(), before);
}

const std::string kOrigin = "two_step/origin";
const std::string kCandidate = "two_step/candidate";

}  // namespace

bool two_step(OrderState& state, MoveDirection direction, TiePolicy ties) {
  const double base = state.score();
  const std::vector<Node> order = state.order();
  const int n = state.size();
  state.bookmark(kOrigin);
  for (int i = 0; i < n; ++i) {
    const Node v = order[i];
    for (int j = i + 1; j < n; ++j) {
      const Node r1 = order[j];
      if (!state.adjacent(v, r1)) continue;
      for (int k = j + 1; k < n; ++k) {
        const Node r2 = order[k];
        if (!state.adjacent(v, r2) || !state.adjacent(r1, r2)) continue;
        state.swap(v, r1);
        state.swap(v, r2);
        const double s = state.score();
        if (improves(s, base)) return true;
        if (!improves(base, s)) {
          // Equal score: accept only if it opens a strictly better single move.
          state.bookmark(kCandidate);
          const bool opens = sweep(state, direction, ties, nullptr, nullptr) &&
                             improves(state.score(), base);
          if (opens) {
            state.restore(kCandidate);
            return true;
          }
        }
        state.restore(kOrigin);
      }
    }
  }
  return false;
}

std::vector<Node> tuck(const OrderState& state, Node x, Node y) {
  const std::vector<Node>& order = state.order();
  const int lo = state.position(y);
  const int hi = state.position(x);
  if (lo >= hi) throw InputError("tuck needs y before x");
  // Ancestors of x within (lo, hi); parents always precede their children.
  std::vector<char> moved(order.size(), 0);
  moved[x] = 1;
  for (int p = hi; p > lo; --p) {
    const Node z = order[p];
    if (!moved[z]) continue;
    for (Node a : state.parents(z)) {
      if (state.position(a) > lo) moved[a] = 1;
    }
  }
  std::vector<Node> out(order.begin(), order.begin() + lo);
  for (int p = lo; p <= hi; ++p) {
    if (moved[order[p]]) out.push_back(order[p]);
  }
  for (int p = lo; p <= hi; ++p) {
    if (!moved[order[p]]) out.push_back(order[p]);
  }
  out.insert(out.end(), order.begin() + hi + 1, order.end());
  return out;
}

namespace {

// The built DAG as bytes: each parent list as fixed-width indices, then -1.
std::string dag_key(const OrderState& state) {
  std::string key;
  const auto put = [&](std::int32_t x) {
    key.append(reinterpret_cast<const char*>(&x), sizeof x);
  };
  for (Node v = 0; v < state.size(); ++v) {
    for (Node p : state.parents(v)) put(static_cast<std::int32_t>(p));
    put(-1);
  }
  return key;
}

bool tuck_search(OrderState& state, double base, int depth, int max_depth,
                 std::unordered_map<std::string, int>& seen) {
  // Covered edges y --> x, with pa(x) = pa(y) + y, come first.
  std::vector<std::pair<Node, Node>> edges, uncovered;
  for (Node x : state.order()) {
    for (Node y : state.parents(x)) {
      NodeSet covered = state.parents(y);
      covered.insert(std::lower_bound(covered.begin(), covered.end(), y), y);
      (covered == state.parents(x) ? edges : uncovered).emplace_back(y, x);
    }
  }
  edges.insert(edges.end(), uncovered.begin(), uncovered.end());
  const std::string label = "tuck/" + std::to_string(depth);
  state.bookmark(label);
  for (auto [y, x] : edges) {
    state.set_order(tuck(state, x, y));
    const double s = state.score();
    if (improves(s, base)) return true;
    if (!improves(base, s) && depth + 1 < max_depth) {
      // Revisit a DAG only when reached with more depth to spare.
      auto [it, fresh] = seen.try_emplace(dag_key(state), depth + 1);
      if (!fresh && it->second > depth + 1) it->second = depth + 1, fresh = true;
      if (fresh && tuck_search(state, base, depth + 1, max_depth, seen)) return true;
    }
    state.restore(label);
  }
  return false;
}

}  // namespace

bool tuck_escape(OrderState& state, int depth) {
  if (depth < 1) return false;
  std::unordered_map<std::string, int> seen{{dag_key(state), 0}};
  return tuck_search(state, state.score(), 0, depth, seen);
}

std::size_t edge_count_lower_bound(const GrowShrinkSource& source) {
  const int n = source.num_variables();
  if (n > kLowerBoundVariableCap) {
    throw InputError("the edge lower bound is limited to " +
                     std::to_string(kLowerBoundVariableCap) + " variables");
  }
  std::size_t bound = 0;
  for (Node x = 0; x < n; ++x) {
    for (Node y = x + 1; y < n; ++y) {
      NodeSet others;
      for (Node v = 0; v < n; ++v) {
        if (v != x && v != y) others.push_back(v);
      }
      bool separable = false;
      for (std::uint32_t mask = 0; !separable && mask < (1u << others.size()); ++mask) {
        NodeSet z;
        for (std::size_t i = 0; i < others.size(); ++i) {
          if (mask >> i & 1u) z.push_back(others[i]);
        }
        separable = source.independent(x, y, z);
      }
      if (!separable) ++bound;
    }
  }
  return bound;
}

SearchResult boss_search(SourcePtr source, const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  config.validate();
  if (!source) throw InputError("missing source");
  const int n = source->num_variables();
  if (n < 1) throw InputError("search needs at least one variable");

  std::vector<Node> order = config.initial_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    if (config.shuffle) {
      Rng rng(derive_seed(config.seed, "order"));
      rng.shuffle(order);
    }
  }
  OrderState state(source, std::move(order),
                   ScorerOptions{config.score_kind, config.parent_method, config.caching});

  std::optional<double> floor;
  if (config.score_kind == ScoreKind::edge_count && n <= kLowerBoundVariableCap) {
    floor = static_cast<double>(edge_count_lower_bound(*source));
  }

  SearchResult r;
  r.score_trace.push_back(state.score());
  for (int it = 0; it < config.max_outer_iterations; ++it) {
    while (sweep(state, config.move_direction, config.tie_policy, &r.move_count,
                 &r.score_trace)) {
    }
    if (!config.use_two_step || (floor && !improves(*floor, state.score()))) break;
    if (!two_step(state, config.move_direction, config.tie_policy) &&
        !tuck_escape(state, config.escape_depth)) {
      break;
    }
    ++r.move_count;
    r.score_trace.push_back(state.score());
  }

  r.final_order = state.order();
  r.dag = state.build_dag();
  r.cpdag = dag_to_cpdag(r.dag);
  r.final_score = state.score();
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace boss
