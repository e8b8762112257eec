#pragma once

// Minor containment testing.  A pattern H is a minor of a host G when G has
// pairwise-disjoint connected "branch sets", one per vertex of H, with an
// edge of G between every pair of branch sets joined in H.  The module also
// decides the biclique-family freeness property used to recognize when a
// join with a dominating clique stays biclique-minor-free.

#include <optional>
#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

struct MinorPattern {
  enum class Kind { Explicit, Star, Biclique };

  Kind kind = Kind::Explicit;
  Graph graph;         // the pattern graph itself
  int a = -1, b = -1;  // Star: a=1, b=#leaves; Biclique: side sizes

  static MinorPattern explicit_graph(Graph g);
  static MinorPattern star_pattern(int leaves);    // K_{1,leaves}
  static MinorPattern biclique(int a, int b);      // K_{a,b}, a,b >= 1

  // "star:3", "biclique:2,3", "explicit:<graph6>"
  static MinorPattern parse(const std::string& text);
  std::string to_string() const;
};

struct BranchModel {
  // branch_sets[i] lists the host vertices standing for pattern vertex i.
  std::vector<std::vector<int>> branch_sets;
};

enum class MinorSearchMode {
  Fast,        // star boundary search / guided branch-set growth
  BruteForce,  // exhaustive over tuples of connected sets (host order <= 8)
};

bool is_valid_model(const Graph& host, const MinorPattern& pattern,
                    const BranchModel& model);

// The returned model is inclusion-minimized and re-validated before return.
std::optional<BranchModel> find_minor(const Graph& host, const MinorPattern& pattern,
                                      MinorSearchMode mode = MinorSearchMode::Fast);

bool has_minor(const Graph& host, const MinorPattern& pattern,
               MinorSearchMode mode = MinorSearchMode::Fast);

// True iff g has no K_{a,t+1-a} minor for any 1 <= a <= min(s, (t+1)/2).
// Components are tested independently; components of order t+1 use the
// complement-component criterion (every complement component must have more
// than min(s, (t+1)/2) vertices), which agrees with the definition there.
bool has_st_property(const Graph& g, int s, int t);

// Same property evaluated straight from the definition: one whole-graph
// minor search per forbidden biclique, no decomposition and no order-(t+1)
// shortcut.  Slower; kept as an independent cross-check path.
bool has_st_property_by_definition(const Graph& g, int s, int t);

// Whether join(K_{s-1}, r) is K_{s,t}-minor-free, decided through
// has_st_property(r, s, t).
bool dominated_join_check(const Graph& r, int s, int t);

}  // namespace spex
