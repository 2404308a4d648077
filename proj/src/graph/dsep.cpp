#include <algorithm>
#include <vector>

#include "boss/error.hpp"
#include "boss/graph.hpp"

namespace boss {

// Reachability over (node, direction) states. A trail may pass a non-collider
// only if the node is unobserved, and a collider only if the node has a
// descendant in z (equivalently, the node is an ancestor of z).
bool d_separated(const Dag& g, Node x, Node y, const NodeSet& z) {
  const int n = g.size();
  if (x < 0 || y < 0 || x >= n || y >= n) throw InputError("node index out of range");
  if (x == y) throw InputError("d-separation query needs two distinct nodes");
  std::vector<bool> observed(n, false);
  for (Node v : z) {
    if (v < 0 || v >= n) throw InputError("node index out of range");
    if (v == x || v == y) throw InputError("conditioning set contains a queried node");
    observed[v] = true;
  }
  const std::vector<bool> anc = g.ancestors_of(z);

  // up: arrived from a child; down: arrived from a parent.
  enum Dir { up = 0, down = 1 };
  std::vector<char> visited(2 * static_cast<std::size_t>(n), 0);
  std::vector<std::pair<Node, Dir>> stack{{x, up}};
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    char& seen = visited[2 * static_cast<std::size_t>(v) + d];
    if (seen) continue;
    seen = 1;
    if (v == y) return false;
    if (d == up) {
      if (observed[v]) continue;
      for (Node p : g.parents(v)) stack.emplace_back(p, up);
      for (Node c : g.children(v)) stack.emplace_back(c, down);
    } else {
      if (!observed[v]) {
        for (Node c : g.children(v)) stack.emplace_back(c, down);
      }
      if (anc[v]) {
        for (Node p : g.parents(v)) stack.emplace_back(p, up);
      }
    }
  }
  return true;
}

bool d_separated(const Dag& g, std::string_view x, std::string_view y,
                 const std::vector<std::string>& z) {
  NodeSet zi;
  for (const auto& name : z) zi.push_back(g.index_of(name));
  std::sort(zi.begin(), zi.end());
  zi.erase(std::unique(zi.begin(), zi.end()), zi.end());
  return d_separated(g, g.index_of(x), g.index_of(y), zi);
}

}  // namespace boss
