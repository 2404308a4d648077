#include "boss/grow_shrink.hpp"

#include <algorithm>
#include <set>

#include "boss/error.hpp"

namespace boss {

namespace {

void insert_sorted(NodeSet& s, Node v) { s.insert(std::lower_bound(s.begin(), s.end(), v), v); }

NodeSet without(const NodeSet& s, Node v) {
  NodeSet out;
  out.reserve(s.size());
  for (Node w : s) {
    if (w != v) out.push_back(w);
  }
  return out;
}

bool contains(const NodeSet& s, Node v) { return std::binary_search(s.begin(), s.end(), v); }

void check_prefix(const GrowShrinkSource& source, Node v, const NodeSet& prefix) {
  if (!std::is_sorted(prefix.begin(), prefix.end()) ||
      std::adjacent_find(prefix.begin(), prefix.end()) != prefix.end()) {
    throw InputError("prefix must be a sorted set");
  }
  if (contains(prefix, v)) throw InputError("variable " + source.names().at(v) + " is in its own prefix");
}

// One grow-then-shrink pass; returns true if mb changed.
bool score_pass(const GrowShrinkSource& s, Node v, const NodeSet& prefix, NodeSet& mb) {
  bool changed = false;
  double current = s.local_score(v, mb);
  while (true) {
    double best = current;
    Node arg = -1;
    for (Node y : prefix) {
      if (contains(mb, y)) continue;
      NodeSet trial = mb;
      insert_sorted(trial, y);
      const double sc = s.local_score(v, trial);
      if (sc < best) {
        best = sc;
        arg = y;
      }
    }
    if (arg < 0) break;
    insert_sorted(mb, arg);
    current = best;
    changed = true;
  }
  while (!mb.empty()) {
    double best = 0.0;
    Node arg = -1;
    for (Node y : mb) {
      const double sc = s.local_score(v, without(mb, y));
      if (arg < 0 || sc < best) {
        best = sc;
        arg = y;
      }
    }
    if (!(best <= current)) break;
    mb = without(mb, arg);
    current = best;
    changed = true;
  }
  return changed;
}

bool ci_pass(const GrowShrinkSource& s, Node v, const NodeSet& prefix, NodeSet& mb) {
  bool changed = false;
  for (bool added = true; added;) {
    added = false;
    for (Node y : prefix) {
      if (contains(mb, y) || s.independent(v, y, mb)) continue;
      insert_sorted(mb, y);
      added = changed = true;
      break;
    }
  }
  for (bool removed = true; removed;) {
    removed = false;
    for (Node y : mb) {
      NodeSet rest = without(mb, y);
      if (!s.independent(v, y, rest)) continue;
      mb = std::move(rest);
      removed = changed = true;
      break;
    }
  }
  return changed;
}

}  // namespace

NodeSet grow_shrink_mb(const GrowShrinkSource& source, Node v, const NodeSet& prefix) {
  check_prefix(source, v, prefix);
  NodeSet mb;
  if (prefix.empty()) return mb;
  // Unfaithful fact lists can make passes cycle; stop on a repeated blanket.
  std::set<NodeSet> seen{mb};
  const bool scored = source.has_score();
  while (scored ? score_pass(source, v, prefix, mb) : ci_pass(source, v, prefix, mb)) {
    if (!seen.insert(mb).second) break;
  }
  return mb;
}

NodeSet verma_pearl_parents(const GrowShrinkSource& source, Node v, const NodeSet& prefix) {
  check_prefix(source, v, prefix);
  NodeSet out;
  for (Node y : prefix) {
    if (!source.independent(v, y, without(prefix, y))) out.push_back(y);
  }
  return out;
}

}  // namespace boss
