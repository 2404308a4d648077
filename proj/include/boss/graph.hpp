#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace boss {

using Node = int;
// Sorted, duplicate-free list of node indices.
using NodeSet = std::vector<Node>;

// "X1".."Xn"
std::vector<std::string> default_names(int n);

// Directed acyclic graph over named nodes, stored as per-node parent sets.
// Every mutation keeps the graph acyclic; add_edge throws rather than close a cycle.
class Dag {
 public:
  Dag() = default;
  explicit Dag(std::vector<std::string> names);
  explicit Dag(int n) : Dag(default_names(n)) {}

  // Builds from complete parent lists; throws InputError on a bad index,
  // a self-parent or a cycle.
  static Dag from_parents(std::vector<std::string> names, std::vector<NodeSet> parents);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Node v) const { return names_.at(v); }
  // Throws InputError for an unknown name.
  Node index_of(std::string_view name) const;

  const NodeSet& parents(Node v) const { return parents_.at(v); }
  const NodeSet& children(Node v) const { return children_.at(v); }
  bool has_edge(Node from, Node to) const;
  bool adjacent(Node a, Node b) const { return has_edge(a, b) || has_edge(b, a); }
  std::size_t edge_count() const;
  // Sorted by (from, to).
  std::vector<std::pair<Node, Node>> edges() const;

  void add_edge(Node from, Node to);
  void add_edge(std::string_view from, std::string_view to) {
    add_edge(index_of(from), index_of(to));
  }

  bool reaches(Node from, Node to) const;
  std::vector<Node> topological_order() const;
  // Nodes with a directed path into any member of `targets`, including the targets.
  std::vector<bool> ancestors_of(const NodeSet& targets) const;

  bool operator==(const Dag& other) const {
    return names_ == other.names_ && parents_ == other.parents_;
  }

 private:
  void check_node(Node v) const;

  std::vector<std::string> names_;
  std::vector<NodeSet> parents_;
  std::vector<NodeSet> children_;
};

enum class EdgeMark { none, undirected, forward, backward };

// Partially directed graph representing a Markov equivalence class. Directed
// edges are stored as (from, to); undirected edges as (low, high).
class Cpdag {
 public:
  Cpdag() = default;
  explicit Cpdag(std::vector<std::string> names) : names_(std::move(names)) {}

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Node v) const { return names_.at(v); }
  Node index_of(std::string_view name) const;

  // Both throw InputError if the pair already carries an edge.
  void add_directed(Node from, Node to);
  void add_undirected(Node a, Node b);

  // Mark between a and b as seen from a: forward means a --> b.
  EdgeMark mark(Node a, Node b) const;
  bool adjacent(Node a, Node b) const { return mark(a, b) != EdgeMark::none; }

  const std::set<std::pair<Node, Node>>& directed() const { return directed_; }
  const std::set<std::pair<Node, Node>>& undirected() const { return undirected_; }
  std::size_t edge_count() const { return directed_.size() + undirected_.size(); }

  auto operator<=>(const Cpdag&) const = default;
  bool operator==(const Cpdag&) const = default;

 private:
  void check_pair(Node a, Node b) const;

  std::vector<std::string> names_;
  std::set<std::pair<Node, Node>> directed_;
  std::set<std::pair<Node, Node>> undirected_;
};

// Standard d-separation (Bayes-ball reachability). Requires x != y and z
// excluding both; violations throw InputError.
bool d_separated(const Dag& g, Node x, Node y, const NodeSet& z);
bool d_separated(const Dag& g, std::string_view x, std::string_view y,
                 const std::vector<std::string>& z);

// Pattern of the Markov equivalence class of g: skeleton plus compelled
// orientations (v-structures closed under Meek's rules).
Cpdag dag_to_cpdag(const Dag& g);

// Graph text format:
//
//   Graph Nodes:
//   X1;X2;X3
//
//   Graph Edges:
//   1. X1 --> X2
//   2. X2 --- X3
//
// Undirected edges appear only in CPDAG output.
std::string format_graph_text(const Dag& g);
std::string format_graph_text(const Cpdag& g);
// Throws ParseError naming the line for malformed input, duplicate edges and cycles.
Dag parse_graph_text(std::string_view text);
Cpdag parse_cpdag_text(std::string_view text);

}  // namespace boss
