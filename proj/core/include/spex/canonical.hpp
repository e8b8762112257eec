#pragma once

// Canonical forms and isomorphism testing for graphs of order <= 64, via
// individualization-refinement: equitable partition refinement, branching
// on the first non-singleton cell with twin skipping, taking the minimum
// adjacency bitstring over the leaves of the search tree.

#include <compare>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// graph6 text of the canonical relabeling; equal iff isomorphic.
struct CanonicalCode {
  std::string bytes;
  auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const Graph& g);

// Permutation perm with perm[old] = new such that relabel(g, perm) is the
// canonical representative of g's isomorphism class.
std::vector<int> canonical_labeling(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace spex
