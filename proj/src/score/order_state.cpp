#include "boss/order_state.hpp"

#include <algorithm>

#include "boss/error.hpp"
#include "boss/grow_shrink.hpp"

namespace boss {

NodeSet prefix_parents(const GrowShrinkSource& source, ParentMethod method, Node v,
                       const NodeSet& prefix) {
  return method == ParentMethod::grow_shrink ? grow_shrink_mb(source, v, prefix)
                                             : verma_pearl_parents(source, v, prefix);
}

namespace {

double local_value(const GrowShrinkSource& s, ScoreKind kind, Node v, const NodeSet& parents) {
  return kind == ScoreKind::edge_count ? static_cast<double>(parents.size())
                                       : s.local_score(v, parents);
}

void check_permutation(const std::vector<Node>& order, int n) {
  if (static_cast<int>(order.size()) != n) throw InputError("order length does not match variables");
  std::vector<bool> seen(n, false);
  for (Node v : order) {
    if (v < 0 || v >= n || seen[v]) throw InputError("order is not a permutation");
    seen[v] = true;
  }
}

}  // namespace

OrderState::OrderState(SourcePtr source, std::vector<Node> order, ScorerOptions options)
    : base_(std::move(source)), options_(options) {
  if (!base_) throw InputError("missing source");
  if (options_.kind == ScoreKind::bic && !base_->has_score()) {
    throw InputError(base_->describe() + " cannot supply BIC scores");
  }
  if (options_.caching) cached_ = std::make_unique<CachedSource>(base_);
  const int n = base_->num_variables();
  parents_.assign(n, {});
  local_.assign(n, 0.0);
  set_order(std::move(order));
}

double OrderState::set_order(std::vector<Node> order) {
  check_permutation(order, base_->num_variables());
  const bool fresh = order_.size() != order.size();
  int lo = 0;
  int hi = static_cast<int>(order.size()) - 1;
  if (!fresh) {
    // Prefix sets outside the changed span are unchanged, and so are their parents.
    while (lo <= hi && order_[lo] == order[lo]) ++lo;
    while (hi >= lo && order_[hi] == order[hi]) --hi;
  }
  order_ = std::move(order);
  refresh_positions();
  rescore_range(lo, hi);
  return total_;
}

void OrderState::refresh_positions() {
  position_.assign(order_.size(), 0);
  for (int i = 0; i < size(); ++i) position_[order_[i]] = i;
}

void OrderState::refresh_total() {
  total_ = 0.0;
  for (double s : local_) total_ += s;
}

void OrderState::rescore(Node v, const NodeSet& prefix) {
  ++rescores_;
  const GrowShrinkSource& src = cached_ ? static_cast<const GrowShrinkSource&>(*cached_) : *base_;
  if (options_.caching) {
    SetKey key{static_cast<std::uint64_t>(v), prefix};
    auto it = mb_cache_.find(key);
    if (it == mb_cache_.end()) {
      it = mb_cache_.emplace(std::move(key), prefix_parents(src, options_.method, v, prefix)).first;
    }
    parents_[v] = it->second;
  } else {
    parents_[v] = prefix_parents(src, options_.method, v, prefix);
  }
  local_[v] = local_value(src, options_.kind, v, parents_[v]);
}

void OrderState::rescore_range(int lo, int hi) {
  if (lo <= hi) {
    NodeSet prefix(order_.begin(), order_.begin() + lo);
    std::sort(prefix.begin(), prefix.end());
    for (int i = lo; i <= hi; ++i) {
      const Node v = order_[i];
      rescore(v, prefix);
      prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
    }
  }
  refresh_total();
}

double OrderState::relocate(Node v, int target) {
  if (target < 0 || target >= size()) throw InputError("target index out of range");
  const int from = position(v);
  if (from == target) return total_;
  order_.erase(order_.begin() + from);
  order_.insert(order_.begin() + target, v);
  const int lo = std::min(from, target);
  const int hi = std::max(from, target);
  for (int i = lo; i <= hi; ++i) position_[order_[i]] = i;
  rescore_range(lo, hi);
  return total_;
}

double OrderState::swap(Node a, Node b) {
  const int pa = position(a);
  const int pb = position(b);
  if (pa == pb) return total_;
  std::swap(order_[pa], order_[pb]);
  position_[a] = pb;
  position_[b] = pa;
  rescore_range(std::min(pa, pb), std::max(pa, pb));
  return total_;
}

void OrderState::bookmark(const std::string& label) {
  bookmarks_[label] = Snapshot{order_, parents_, local_};
}

void OrderState::restore(const std::string& label) {
  auto it = bookmarks_.find(label);
  if (it == bookmarks_.end()) throw InputError("unknown bookmark '" + label + "'");
  order_ = it->second.order;
  parents_ = it->second.parents;
  local_ = it->second.local;
  refresh_positions();
  refresh_total();
}

double OrderState::full_rescore() const {
  std::vector<double> local(order_.size(), 0.0);
  NodeSet prefix;
  for (Node v : order_) {
    local[v] = local_value(*base_, options_.kind, v, prefix_parents(*base_, options_.method, v, prefix));
    prefix.insert(std::lower_bound(prefix.begin(), prefix.end(), v), v);
  }
  double total = 0.0;
  for (double s : local) total += s;
  return total;
}

Dag OrderState::build_dag() const { return Dag::from_parents(base_->names(), parents_); }

bool OrderState::adjacent(Node a, Node b) const {
  const auto has = [this](Node child, Node p) {
    return std::binary_search(parents_[child].begin(), parents_[child].end(), p);
  };
  return has(a, b) || has(b, a);
}

}  // namespace boss
