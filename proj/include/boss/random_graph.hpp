#pragma once

#include <cstdint>

#include "boss/graph.hpp"

namespace boss {

enum class GraphGenerator { erdos_renyi_forward, scale_free };

// Directed preferential attachment parameters; gamma = 1 - alpha - beta.
struct ScaleFreeParams {
  double alpha = 0.41;
  double beta = 0.54;
  double delta_in = 0.2;
  double delta_out = 0.1;
};

struct RandomGraphSpec {
  int num_nodes = 10;
  double avg_degree = 2.0;
  GraphGenerator generator = GraphGenerator::erdos_renyi_forward;
  ScaleFreeParams scale_free;
  std::uint64_t seed = 0;

  // Throws InputError when the spec is infeasible.
  void validate() const;
};

// Erdos-Renyi forward: exactly round(n * d / 2) edges chosen uniformly without
// replacement, directed along a uniformly random node order.
// Scale-free: preferential attachment run until num_nodes nodes exist;
// multi-edges and self-loops collapse and edges follow creation order.
// Nodes are named X1..Xn. Identical specs give identical graphs.
Dag generate_dag(const RandomGraphSpec& spec);

}  // namespace boss
