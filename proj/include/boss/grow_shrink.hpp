#pragma once

#include "boss/graph.hpp"
#include "boss/source.hpp"

namespace boss {

// Iterated grow-shrink Markov blanket of v within prefix.
//
// Score sources: grow adds the candidate giving the strictly lowest score,
// shrink removes a member whose removal does not raise the score; the lowest
// index wins ties. CI sources: grow adds the lowest-index candidate dependent
// on v given the current set, shrink removes the lowest-index member
// independent of v given the rest. Passes repeat until nothing changes.
//
// Candidates are scanned in index order, so the result depends only on the
// prefix as a set. Requires v not in prefix.
NodeSet grow_shrink_mb(const GrowShrinkSource& source, Node v, const NodeSet& prefix);

// { y in prefix : not independent(v, y, prefix \ {y}) }
NodeSet verma_pearl_parents(const GrowShrinkSource& source, Node v, const NodeSet& prefix);

}  // namespace boss
