#include "boss/graph.hpp"

#include <algorithm>
#include <deque>

#include "boss/error.hpp"

namespace boss {

namespace {

void insert_sorted(NodeSet& set, Node v) {
  set.insert(std::lower_bound(set.begin(), set.end(), v), v);
}

}  // namespace

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 1; i <= n; ++i) {
    names.push_back("X" + std::to_string(i));
  }
  return names;
}

Dag::Dag(std::vector<std::string> names)
    : names_(std::move(names)), parents_(names_.size()), children_(names_.size()) {
  std::vector<std::string> sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("duplicate node name");
  }
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("empty node name");
  }
}

Dag Dag::from_parents(std::vector<std::string> names, std::vector<NodeSet> parents) {
  Dag g(std::move(names));
  if (parents.size() != g.names_.size()) {
    throw InputError("parent list count does not match node count");
  }
  for (Node v = 0; v < g.size(); ++v) {
    NodeSet ps = parents[v];
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end()) {
      throw InputError("duplicate parent of " + g.name(v));
    }
    for (Node p : ps) {
      g.check_node(p);
      if (p == v) throw InputError("self-parent on " + g.name(v));
      insert_sorted(g.children_[p], v);
    }
    g.parents_[v] = std::move(ps);
  }
  g.topological_order();  // throws on a cycle
  return g;
}

Node Dag::index_of(std::string_view name) const {
  for (Node i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InputError("unknown node '" + std::string(name) + "'");
}

void Dag::check_node(Node v) const {
  if (v < 0 || v >= size()) {
    throw InputError("node index " + std::to_string(v) + " out of range");
  }
}

bool Dag::has_edge(Node from, Node to) const {
  const auto& ps = parents_.at(to);
  return std::binary_search(ps.begin(), ps.end(), from);
}

std::size_t Dag::edge_count() const {
  std::size_t m = 0;
  for (const auto& ps : parents_) m += ps.size();
  return m;
}

std::vector<std::pair<Node, Node>> Dag::edges() const {
  std::vector<std::pair<Node, Node>> out;
  for (Node from = 0; from < size(); ++from) {
    for (Node to : children_[from]) out.emplace_back(from, to);
  }
  return out;
}

void Dag::add_edge(Node from, Node to) {
  check_node(from);
  check_node(to);
  if (from == to) throw InputError("self loop on " + name(from));
  if (has_edge(from, to)) {
    throw InputError("duplicate edge " + name(from) + " --> " + name(to));
  }
  if (reaches(to, from)) {
    throw InputError("edge " + name(from) + " --> " + name(to) + " creates a cycle");
  }
  insert_sorted(parents_[to], from);
  insert_sorted(children_[from], to);
}

bool Dag::reaches(Node from, Node to) const {
  std::vector<bool> seen(size(), false);
  std::vector<Node> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (Node c : children_[v]) {
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return false;
}

std::vector<Node> Dag::topological_order() const {
  std::vector<int> indegree(size());
  for (Node v = 0; v < size(); ++v) indegree[v] = static_cast<int>(parents_[v].size());
  std::deque<Node> ready;
  for (Node v = 0; v < size(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::vector<Node> order;
  order.reserve(size());
  while (!ready.empty()) {
    Node v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (Node c : children_[v]) {
      if (--indegree[c] == 0) ready.push_back(c);
    }
  }
  if (static_cast<int>(order.size()) != size()) throw InputError("graph contains a cycle");
  return order;
}

std::vector<bool> Dag::ancestors_of(const NodeSet& targets) const {
  std::vector<bool> anc(size(), false);
  std::vector<Node> stack;
  for (Node t : targets) {
    check_node(t);
    if (!anc[t]) {
      anc[t] = true;
      stack.push_back(t);
    }
  }
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node p : parents_[v]) {
      if (!anc[p]) {
        anc[p] = true;
        stack.push_back(p);
      }
    }
  }
  return anc;
}

// ---------------------------------------------------------------------------

Node Cpdag::index_of(std::string_view name) const {
  for (Node i = 0; i < size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw InputError("unknown node '" + std::string(name) + "'");
}

void Cpdag::check_pair(Node a, Node b) const {
  if (a < 0 || b < 0 || a >= size() || b >= size()) {
    throw InputError("node index out of range");
  }
  if (a == b) throw InputError("self loop on " + name(a));
  if (adjacent(a, b)) {
    throw InputError("pair " + name(a) + ", " + name(b) + " already has an edge");
  }
}

void Cpdag::add_directed(Node from, Node to) {
  check_pair(from, to);
  directed_.emplace(from, to);
}

void Cpdag::add_undirected(Node a, Node b) {
  check_pair(a, b);
  undirected_.emplace(std::min(a, b), std::max(a, b));
}

EdgeMark Cpdag::mark(Node a, Node b) const {
  if (directed_.count({a, b})) return EdgeMark::forward;
  if (directed_.count({b, a})) return EdgeMark::backward;
  if (undirected_.count({std::min(a, b), std::max(a, b)})) return EdgeMark::undirected;
  return EdgeMark::none;
}

}  // namespace boss
