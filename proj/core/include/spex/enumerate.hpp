#pragma once

// Exhaustive generation of unlabeled graphs, one representative per
// isomorphism class, by canonical augmentation: a child produced by
// appending a vertex is kept iff deleting its canonical-last vertex gives
// the parent back (up to isomorphism), with isomorphic children of the same
// parent deduplicated.  Visit order is deterministic, independent of the
// thread count configured via SPEX_THREADS.

#include <functional>

#include "spex/graph.hpp"

namespace spex {

using GraphVisitor = std::function<void(const Graph&)>;

// Calls visit once per isomorphism class of graphs of order exactly n
// (1 <= n <= 10), restricted to connected graphs when connected_only.
void enumerate_graphs(int n, bool connected_only, const GraphVisitor& visit);

long long count_graphs(int n, bool connected_only);

}  // namespace spex
