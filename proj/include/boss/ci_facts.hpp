#pragma once

#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "boss/graph.hpp"

namespace boss {

struct CiFact {
  Node x;
  Node y;
  NodeSet z;

  bool operator==(const CiFact&) const = default;
};

// An explicit list of conditional independence facts. Lookups are symmetric
// in (x, y); anything not listed is a dependence.
class FactList {
 public:
  FactList() = default;
  explicit FactList(std::vector<std::string> names) : names_(std::move(names)) {}

  const std::vector<std::string>& names() const { return names_; }
  int size() const { return static_cast<int>(names_.size()); }
  Node index_of(std::string_view name) const;

  // Facts in insertion order, as written.
  const std::vector<CiFact>& facts() const { return facts_; }

  void add(Node x, Node y, NodeSet z);
  bool contains(Node x, Node y, const NodeSet& z) const;

 private:
  std::vector<std::string> names_;
  std::vector<CiFact> facts_;
  std::set<std::tuple<Node, Node, NodeSet>> lookup_;
};

// One fact per line: `x _||_ y | z1, z2`, with `| ...` omitted for marginal
// facts. Tokens are integers or names. Without explicit names the variable
// set is the tokens seen, ordered numerically when all are integers and by
// first appearance otherwise. Blank lines are skipped.
FactList parse_fact_text(std::string_view text);
FactList parse_fact_text(std::string_view text, std::vector<std::string> names);
std::string format_fact_text(const FactList& facts);

}  // namespace boss
