#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "boss/graph.hpp"
#include "boss/source.hpp"

namespace boss {

enum class ScoreKind { edge_count, bic };
enum class ParentMethod { grow_shrink, verma_pearl };

struct ScorerOptions {
  ScoreKind kind = ScoreKind::edge_count;
  ParentMethod method = ParentMethod::grow_shrink;
  bool caching = true;
};

// Parent set of v given its prefix under the chosen method.
NodeSet prefix_parents(const GrowShrinkSource& source, ParentMethod method, Node v,
                       const NodeSet& prefix);

// A permutation with per-variable parents and local scores kept current
// under moves. Invariant: score() equals full_rescore() bit for bit, since
// both sum the same local scores in node-index order.
class OrderState {
 public:
  OrderState(SourcePtr source, std::vector<Node> order, ScorerOptions options = {});

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<Node>& order() const { return order_; }
  int position(Node v) const { return position_.at(v); }
  const NodeSet& parents(Node v) const { return parents_.at(v); }
  double local_score(Node v) const { return local_.at(v); }
  double score() const { return total_; }
  const ScorerOptions& options() const { return options_; }
  const GrowShrinkSource& source() const { return *base_; }
  const std::vector<std::string>& names() const { return base_->names(); }

  // Moves v to index target; rescores only the variables between the old and
  // new positions. Returns the new total.
  double relocate(Node v, int target);
  // Exchanges the positions of a and b.
  double swap(Node a, Node b);
  double set_order(std::vector<Node> order);

  void bookmark(const std::string& label);
  // Throws InputError for an unknown label.
  void restore(const std::string& label);
  bool has_bookmark(const std::string& label) const { return bookmarks_.count(label) > 0; }

  // From-scratch score of the current order through the uncached source.
  double full_rescore() const;

  Dag build_dag() const;
  // Edge in the DAG implied by the current parents.
  bool adjacent(Node a, Node b) const;

  std::size_t rescore_count() const { return rescores_; }

 private:
  struct Snapshot {
    std::vector<Node> order;
    std::vector<NodeSet> parents;
    std::vector<double> local;
  };

  void rescore_range(int lo, int hi);
  void rescore(Node v, const NodeSet& prefix);
  void refresh_positions();
  void refresh_total();

  SourcePtr base_;
  std::unique_ptr<CachedSource> cached_;
  ScorerOptions options_;
  std::vector<Node> order_;
  std::vector<int> position_;
  std::vector<NodeSet> parents_;
  std::vector<double> local_;
  double total_ = 0.0;
  std::size_t rescores_ = 0;
  std::unordered_map<SetKey, NodeSet, SetKeyHash> mb_cache_;
  std::map<std::string, Snapshot> bookmarks_;
};

}  // namespace boss
