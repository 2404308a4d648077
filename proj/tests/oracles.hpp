#pragma once

// Brute-force reference implementations for the tests. They share no code
// with the library beyond the graph container.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "boss/graph.hpp"
#include "boss/rng.hpp"

namespace boss::oracle {

// Nodes with a directed path into `nodes`, the nodes included.
inline std::vector<bool> ancestral(const Dag& g, const std::vector<Node>& nodes) {
  std::vector<bool> in(g.size(), false);
  std::vector<Node> stack(nodes);
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    if (in[v]) continue;
    in[v] = true;
    for (Node p : g.parents(v)) stack.push_back(p);
  }
  return in;
}

// x _||_ y | z by moralizing the ancestral graph of {x, y} + z, deleting z and
// testing reachability.
inline bool moral_separated(const Dag& g, Node x, Node y, const NodeSet& z) {
  std::vector<Node> seed{x, y};
  seed.insert(seed.end(), z.begin(), z.end());
  const std::vector<bool> keep = ancestral(g, seed);
  const int n = g.size();
  std::vector<std::set<Node>> adj(n);
  for (Node v = 0; v < n; ++v) {
    if (!keep[v]) continue;
    const NodeSet& pa = g.parents(v);
    for (Node p : pa) {
      adj[v].insert(p);
      adj[p].insert(v);
    }
    for (std::size_t i = 0; i < pa.size(); ++i) {
      for (std::size_t j = i + 1; j < pa.size(); ++j) {
        adj[pa[i]].insert(pa[j]);
        adj[pa[j]].insert(pa[i]);
      }
    }
  }
  std::vector<bool> blocked(n, false);
  for (Node v : z) blocked[v] = true;
  std::vector<bool> seen(n, false);
  std::queue<Node> q;
  q.push(x);
  seen[x] = true;
  while (!q.empty()) {
    const Node v = q.front();
    q.pop();
    if (v == y) return false;
    for (Node w : adj[v]) {
      if (!seen[w] && !blocked[w]) {
        seen[w] = true;
        q.push(w);
      }
    }
  }
  return true;
}

// Calls f(x, y, z) for every x < y and every subset z of the other nodes.
template <class F>
void for_each_query(int n, F f) {
  for (Node x = 0; x < n; ++x) {
    for (Node y = x + 1; y < n; ++y) {
      NodeSet others;
      for (Node v = 0; v < n; ++v) {
        if (v != x && v != y) others.push_back(v);
      }
      for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
        NodeSet z;
        for (std::size_t i = 0; i < others.size(); ++i) {
          if (mask >> i & 1u) z.push_back(others[i]);
        }
        f(x, y, z);
      }
    }
  }
}

inline std::vector<bool> separation_profile(const Dag& g) {
  std::vector<bool> out;
  for_each_query(g.size(), [&](Node x, Node y, const NodeSet& z) {
    out.push_back(moral_separated(g, x, y, z));
  });
  return out;
}

inline bool acyclic(int n, const std::vector<std::pair<Node, Node>>& edges) {
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<Node>> out(n);
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<Node> ready;
  for (Node v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  int visited = 0;
  while (!ready.empty()) {
    const Node v = ready.back();
    ready.pop_back();
    ++visited;
    for (Node w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return visited == n;
}

// Every DAG on g's skeleton with exactly g's separation statements.
inline std::vector<Dag> equivalence_class(const Dag& g) {
  const auto skeleton = g.edges();
  const std::vector<bool> profile = separation_profile(g);
  std::vector<Dag> members;
  for (std::uint32_t mask = 0; mask < (1u << skeleton.size()); ++mask) {
    std::vector<std::pair<Node, Node>> edges;
    for (std::size_t i = 0; i < skeleton.size(); ++i) {
      auto [a, b] = skeleton[i];
      edges.push_back(mask >> i & 1u ? std::pair{b, a} : std::pair{a, b});
    }
    if (!acyclic(g.size(), edges)) continue;
    std::vector<NodeSet> parents(g.size());
    for (auto [a, b] : edges) parents[b].push_back(a);
    for (auto& p : parents) std::sort(p.begin(), p.end());
    Dag d = Dag::from_parents(g.names(), parents);
    if (separation_profile(d) == profile) members.push_back(std::move(d));
  }
  return members;
}

// Directed where every member of the class agrees, undirected otherwise.
inline Cpdag mec_consensus(const Dag& g) {
  const std::vector<Dag> members = equivalence_class(g);
  Cpdag out(g.names());
  for (auto [a, b] : g.edges()) {
    const bool forward = std::all_of(members.begin(), members.end(),
                                     [&](const Dag& d) { return d.has_edge(a, b); });
    const bool backward = std::all_of(members.begin(), members.end(),
                                      [&](const Dag& d) { return d.has_edge(b, a); });
    if (forward) {
      out.add_directed(a, b);
    } else if (backward) {
      out.add_directed(b, a);
    } else {
      out.add_undirected(std::min(a, b), std::max(a, b));
    }
  }
  return out;
}

// Random DAG: edges along a shuffled order, each pair kept with probability p.
inline Dag random_dag(int n, double p, Rng& rng) {
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<NodeSet> parents(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform01() < p) parents[order[j]].push_back(order[i]);
    }
  }
  for (auto& pa : parents) std::sort(pa.begin(), pa.end());
  return Dag::from_parents(default_names(n), parents);
}

}  // namespace boss::oracle
