#include <vector>

#include "boss/graph.hpp"

namespace boss {

namespace {

struct Pattern {
  explicit Pattern(int n) : n(n), adj(n * n, false), arrow(n * n, false) {}

  bool adjacent(Node a, Node b) const { return adj[a * n + b]; }
  // a --> b
  bool directed(Node a, Node b) const { return arrow[a * n + b]; }
  bool undirected(Node a, Node b) const {
    return adjacent(a, b) && !directed(a, b) && !directed(b, a);
  }
  bool orient(Node a, Node b) {
    if (!undirected(a, b)) return false;
    arrow[a * n + b] = true;
    return true;
  }

  int n;
  std::vector<bool> adj;
  std::vector<bool> arrow;
};

// One sweep of Meek rules 1-3; rule 4 cannot fire when the only prior
// orientations are v-structures.
bool apply_meek_rules(Pattern& p) {
  bool changed = false;
  const int n = p.n;
  for (Node b = 0; b < n; ++b) {
    for (Node c = 0; c < n; ++c) {
      if (b == c || !p.undirected(b, c)) continue;
      // R1: a --> b --- c, a and c nonadjacent  =>  b --> c
      for (Node a = 0; a < n; ++a) {
        if (a != c && p.directed(a, b) && !p.adjacent(a, c)) {
          changed |= p.orient(b, c);
          break;
        }
      }
      if (!p.undirected(b, c)) continue;
      // R2: b --> a --> c, b --- c  =>  b --> c
      for (Node a = 0; a < n; ++a) {
        if (p.directed(b, a) && p.directed(a, c)) {
          changed |= p.orient(b, c);
          break;
        }
      }
      if (!p.undirected(b, c)) continue;
      // R3: b --- d1 --> c, b --- d2 --> c, d1 and d2 nonadjacent  =>  b --> c
      bool fired = false;
      for (Node d1 = 0; d1 < n && !fired; ++d1) {
        if (!p.undirected(b, d1) || !p.directed(d1, c)) continue;
        for (Node d2 = d1 + 1; d2 < n; ++d2) {
          if (p.undirected(b, d2) && p.directed(d2, c) && !p.adjacent(d1, d2)) {
            changed |= p.orient(b, c);
            fired = true;
            break;
          }
        }
      }
    }
  }
  return changed;
}

}  // namespace

Cpdag dag_to_cpdag(const Dag& g) {
  const int n = g.size();
  Pattern p(n);
  for (auto [a, b] : g.edges()) {
    p.adj[a * n + b] = true;
    p.adj[b * n + a] = true;
  }
  for (Node c = 0; c < n; ++c) {
    const NodeSet& ps = g.parents(c);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) {
        if (!g.adjacent(ps[i], ps[j])) {
          p.arrow[ps[i] * n + c] = true;
          p.arrow[ps[j] * n + c] = true;
        }
      }
    }
  }
  while (apply_meek_rules(p)) {
  }

  Cpdag out(g.names());
  for (auto [a, b] : g.edges()) {
    if (p.directed(a, b)) {
      out.add_directed(a, b);
    } else {
      out.add_undirected(a, b);
    }
  }
  return out;
}

}  // namespace boss
