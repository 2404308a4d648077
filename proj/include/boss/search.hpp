#pragma once

#include <cstdint>
#include <vector>

#include "boss/graph.hpp"
#include "boss/order_state.hpp"
#include "boss/source.hpp"

namespace boss {

enum class MoveDirection { both, left_only };
// Where best_move leaves a variable when several positions tie for the best
// score: at its original index, or at the right-most tied index scanned.
enum class TiePolicy { keep_original, rightmost };

struct SearchConfig {
  ScoreKind score_kind = ScoreKind::edge_count;
  ParentMethod parent_method = ParentMethod::grow_shrink;
  bool use_two_step = true;
  MoveDirection move_direction = MoveDirection::both;
  TiePolicy tie_policy = TiePolicy::keep_original;
  // Depth of the tuck search run when sweeps and two_step stall; 0 disables it.
  int escape_depth = 8;
  int max_outer_iterations = 100;
  // Initial order: `initial_order` when non-empty, else the identity,
  // shuffled from `seed` when `shuffle` is set.
  std::vector<Node> initial_order;
  bool shuffle = false;
  std::uint64_t seed = 0;
  bool caching = true;

  void validate() const;
};

struct SearchResult {
  std::vector<Node> final_order;
  Dag dag;
  Cpdag cpdag;
  double final_score = 0.0;
  std::size_t move_count = 0;
  double elapsed_seconds = 0.0;
  // Score after each accepted move, starting with the initial score.
  std::vector<double> score_trace;
};

// True if a is a strict improvement over b, beyond rounding noise.
bool improves(double a, double b);

// Slides v from the last position leftward and leaves it at the best index
// seen; the original index wins ties, then the right-most minimum. Returns
// true if the score strictly dropped.
bool best_move(OrderState& state, Node v, MoveDirection direction = MoveDirection::both,
               TiePolicy ties = TiePolicy::keep_original);

// Looks for a triangle v --> r1 --> r2, v --> r2 (r1, r2 right of v) whose
// double swap v<->r1, v<->r2 strictly lowers the score, or keeps it equal
// while one further sweep of best_move from there lowers it. On acceptance
// the state holds the swapped order; otherwise it is unchanged.
bool two_step(OrderState& state, MoveDirection direction = MoveDirection::both,
              TiePolicy ties = TiePolicy::keep_original);

// Order after moving x, with its ancestors lying between y and x, to just
// before y, keeping their relative order. Requires y before x.
std::vector<Node> tuck(const OrderState& state, Node x, Node y);

// Depth-first search over tucks of DAG edges y --> x, covered edges first
// (pa(x) = pa(y) + y), descending through
// equal-score states with unseen DAGs up to `depth` tucks deep, until one
// strictly lowers the score. On success the state holds the improved order;
// otherwise it is unchanged.
bool tuck_escape(OrderState& state, int depth);

inline constexpr int kLowerBoundVariableCap = 12;

// Number of pairs dependent given every subset of the other variables. Each
// such pair is adjacent in every DAG built from any order, so this bounds the
// edge-count score from below. Throws InputError above the cap.
std::size_t edge_count_lower_bound(const GrowShrinkSource& source);

// Edge-count searches within the lower-bound cap stop as soon as the score
// meets the bound.
SearchResult boss_search(SourcePtr source, const SearchConfig& config = {});

struct SpResult {
  SearchResult best;  // lexicographically first minimizing order
  std::vector<std::vector<Node>> minimizing_orders;
  std::vector<Cpdag> minimizing_cpdags;  // distinct, sorted
};

inline constexpr int kSpVariableCap = 9;

// Exhaustive search over all permutations. Throws InputError above the cap.
SpResult sp(SourcePtr source, ScoreKind kind = ScoreKind::edge_count,
            ParentMethod method = ParentMethod::grow_shrink, int cap = kSpVariableCap);

}  // namespace boss
