#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "boss/graph.hpp"
#include "boss/search.hpp"
#include "boss/source.hpp"

namespace boss {

// Adjacency precision/recall over skeletons, arrowhead precision/recall over
// directed endpoints, and the pair-level structural Hamming distance.
// A 0/0 precision or recall is 1; a 0/0 false positive rate is 0.
struct MetricsRecord {
  double ap = 1.0;
  double ar = 1.0;
  double ahp = 1.0;
  double ahr = 1.0;
  double atpr = 1.0;
  double afpr = 0.0;
  double shd = 0.0;
  double elapsed_seconds = 0.0;
};

// Throws InputError unless both graphs share the same node names.
MetricsRecord compare_cpdags(const Cpdag& estimated, const Cpdag& truth);

enum class Algorithm { boss, sp };

struct UniqueCpdags {
  std::size_t count = 0;
  std::set<Cpdag> cpdags;
};

// Runs the algorithm from `restarts` shuffled initial orders, restart r
// seeded with derive_seed(seed_base, r), and collects the distinct CPDAGs.
UniqueCpdags unique_cpdag_count(const SourcePtr& source, Algorithm algorithm, int restarts,
                                std::uint64_t seed_base, const SearchConfig& config = {});

}  // namespace boss
