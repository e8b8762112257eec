#pragma once

// Simple undirected graphs with a two-tier representation: orders up to 64
// live in bitset adjacency rows (one word per vertex), larger orders up to
// 10^4 fall back to sorted adjacency lists.  All structural operations used
// by the rest of the library live here as free functions.

#include <cstdint>
#include <utility>
#include <vector>

#include "spex/errors.hpp"

namespace spex {

// Non-increasing vertex degree list.
using DegreeSequence = std::vector<int>;

class Graph {
public:
  static constexpr int kFastCapacity = 64;
  static constexpr int kGeneralCapacity = 10000;

  Graph() = default;
  explicit Graph(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long long size() const { return edge_count_; }
  bool fast_tier() const { return n_ <= kFastCapacity; }

  bool adjacent(int u, int v) const;
  void add_edge(int u, int v);     // DomainError on loops or duplicate edges
  void remove_edge(int u, int v);  // DomainError if the edge is absent
  int degree(int v) const;

  // Fast tier only: adjacency row of v as a bitmask.
  std::uint64_t bits(int v) const;

  // Sorted neighbor list (materialized on the fast tier).
  std::vector<int> neighbors(int v) const;

  template <typename F>
  void for_neighbors(int v, F&& f) const {
    check_vertex(v);
    if (fast_tier()) {
      std::uint64_t m = rows_[static_cast<std::size_t>(v)];
      while (m != 0) {
        int w = __builtin_ctzll(m);
        m &= m - 1;
        f(w);
      }
    } else {
      for (int w : adj_[static_cast<std::size_t>(v)]) f(w);
    }
  }

  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<std::uint64_t> rows_;       // fast tier
  std::vector<std::vector<int>> adj_;     // general tier, each list sorted
};

// ---- structural operations -------------------------------------------------

Graph complement(const Graph& g);

// Disjoint union followed by all edges between the two sides.
Graph join(const Graph& g, const Graph& h);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph disjoint_union(const std::vector<Graph>& parts);

// Subdivide one minimum-degree-sum edge k times (k new path vertices are
// appended at indices |g|..|g|+k-1).  Ties break on the lexicographically
// smallest endpoint pair (u,v), u<v.  Requires at least one edge; k >= 0.
Graph subdivide_min_edge(const Graph& g, int k);

// Remove vw and add uw.  Requires vw in E, uw not in E, u != w.
Graph rotate_edge(const Graph& g, int u, int v, int w);

DegreeSequence degree_sequence(const Graph& g);

// Keeps the listed vertices (which become 0..k-1 in list order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Result has an edge (perm[u], perm[v]) for every edge (u,v) of g.
Graph relabel(const Graph& g, const std::vector<int>& perm);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// ---- majorization ----------------------------------------------------------
//
// weak_majorizes(x, y): every prefix sum of x is <= the matching prefix sum
// of y, comparing the sequences in non-increasing order (x is weakly
// majorized by y).  majorizes(x, y) additionally requires equal totals.
// Shorter sequences are implicitly padded with zeros.

bool weak_majorizes(const std::vector<long long>& x, const std::vector<long long>& y);
bool majorizes(const std::vector<long long>& x, const std::vector<long long>& y);
bool weak_majorizes(const DegreeSequence& x, const DegreeSequence& y);
bool majorizes(const DegreeSequence& x, const DegreeSequence& y);

}  // namespace spex
