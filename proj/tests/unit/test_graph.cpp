#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <spex/canonical.hpp>
#include <spex/errors.hpp>
#include <spex/families.hpp>
#include <spex/graph.hpp>

using namespace spex;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution flip(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (flip(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("edge bookkeeping and input validation") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 1), DomainError);
  CHECK_THROWS_AS(g.remove_edge(0, 3), DomainError);
  g.remove_edge(0, 1);
  CHECK(g.size() == 1);
  CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("from_edges and neighbor iteration") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 1}});
  CHECK(g.neighbors(1) == std::vector<int>{0, 2, 3});
  int sum = 0;
  g.for_neighbors(1, [&](int w) { sum += w; });
  CHECK(sum == 5);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("complement is an involution and counts complement edges") {
  std::mt19937_64 rng(12345);
  for (int n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      const Graph g = random_graph(rng, n);
      const Graph gc = complement(g);
      CHECK(g.size() + gc.size() == static_cast<long long>(n) * (n - 1) / 2);
      CHECK(complement(gc) == g);
    }
  }
}

TEST_CASE("join order and size formulas") {
  std::mt19937_64 rng(777);
  for (int rep = 0; rep < 20; ++rep) {
    const Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 6));
    const Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 6));
    const Graph j = join(a, b);
    CHECK(j.order() == a.order() + b.order());
    CHECK(j.size() == a.size() + b.size() +
                          static_cast<long long>(a.order()) * b.order());
    // Every cross pair is connected.
    for (int u = 0; u < a.order(); ++u) {
      for (int v = 0; v < b.order(); ++v) {
        CHECK(j.adjacent(u, a.order() + v));
      }
    }
  }
}

TEST_CASE("disjoint union is associative up to isomorphism") {
  const Graph a = cycle_graph(4);
  const Graph b = complete_graph(3);
  const Graph c = path_graph(2);
  const Graph left = disjoint_union(disjoint_union(a, b), c);
  const Graph right = disjoint_union(a, disjoint_union(b, c));
  CHECK(canonical_code(left) == canonical_code(right));
  CHECK(disjoint_union({a, b, c}).size() == a.size() + b.size() + c.size());
}

TEST_CASE("subdividing a triangle repeatedly yields cycles") {
  for (int n = 4; n <= 9; ++n) {
    const Graph s = subdivide_min_edge(complete_graph(3), n - 3);
    CHECK(isomorphic(s, cycle_graph(n)));
  }
}

TEST_CASE("double subdivision of a clique") {
  const Graph s = subdivide_min_edge(complete_graph(4), 2);
  CHECK(s.order() == 6);
  CHECK(s.size() == 8);
  CHECK(degree_sequence(s) == DegreeSequence{3, 3, 3, 3, 2, 2});
}

TEST_CASE("edge rotation transfers one endpoint") {
  // Move edge (2,3) to (0,3): degrees go from all-1 to (2,1,1,0).
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const Graph r = rotate_edge(g, 0, 2, 3);
  CHECK(r.size() == 2);
  CHECK(r.adjacent(0, 3));
  CHECK_FALSE(r.adjacent(2, 3));
  CHECK(degree_sequence(r) == DegreeSequence{2, 1, 1, 0});
  CHECK(majorizes(degree_sequence(g), degree_sequence(r)));
  CHECK_THROWS_AS(rotate_edge(g, 0, 1, 3), DomainError);  // (1,3) not an edge
  CHECK_THROWS_AS(rotate_edge(g, 0, 2, 0), DomainError);  // u == w
  const Graph h = Graph::from_edges(4, {{0, 1}, {2, 3}, {0, 3}});
  CHECK_THROWS_AS(rotate_edge(h, 0, 2, 3), DomainError);  // (0,3) already present
}

TEST_CASE("rotations toward a higher-degree vertex majorize the old degrees") {
  std::mt19937_64 rng(4242);
  int checked = 0;
  while (checked < 300) {
    const Graph g = random_graph(rng, 7, 0.4);
    const int u = static_cast<int>(rng() % 7);
    const int v = static_cast<int>(rng() % 7);
    if (u == v || g.degree(u) < g.degree(v)) continue;
    for (int w = 0; w < 7 && checked < 300; ++w) {
      if (w == u || w == v || !g.adjacent(v, w) || g.adjacent(u, w)) continue;
      const Graph r = rotate_edge(g, u, v, w);
      const DegreeSequence before = degree_sequence(g);
      const DegreeSequence after = degree_sequence(r);
      CHECK(majorizes(before, after));
      CHECK(before != after);
      ++checked;
    }
  }
}

TEST_CASE("degree sequences are sorted and sum to twice the size") {
  CHECK(degree_sequence(petersen()) == DegreeSequence(10, 3));
  CHECK(degree_sequence(disjoint_union(complete_graph(5), complete_graph(2))) ==
        DegreeSequence{4, 4, 4, 4, 4, 1, 1});
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = random_graph(rng, 9);
    const DegreeSequence d = degree_sequence(g);
    CHECK(std::is_sorted(d.rbegin(), d.rend()));
    CHECK(std::accumulate(d.begin(), d.end(), 0LL) == 2 * g.size());
  }
}

TEST_CASE("induced subgraphs and relabeling") {
  const Graph k5 = complete_graph(5);
  CHECK(induced_subgraph(k5, {0, 2, 4}) == complete_graph(3));
  const Graph p4 = path_graph(4);
  const Graph rev = relabel(p4, {3, 2, 1, 0});
  CHECK(rev == p4);  // reversing a path maps it onto itself
  const Graph g = Graph::from_edges(3, {{0, 1}});
  const Graph moved = relabel(g, {2, 0, 1});
  CHECK(moved.adjacent(2, 0));
  CHECK(moved.size() == 1);
}

TEST_CASE("connectivity queries") {
  const Graph two = disjoint_union(complete_graph(3), cycle_graph(4));
  const auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() + comps[1].size() == 7);
  CHECK_FALSE(is_connected(two));
  CHECK(is_connected(petersen()));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("majorization orders with zero padding") {
  CHECK(majorizes(DegreeSequence{2, 2}, DegreeSequence{3, 1}));
  CHECK_FALSE(majorizes(DegreeSequence{3, 1}, DegreeSequence{2, 2}));
  CHECK(majorizes(DegreeSequence{1, 1, 1, 1}, DegreeSequence{2, 1, 1}));
  CHECK(weak_majorizes(DegreeSequence{1, 1}, DegreeSequence{3, 1}));
  CHECK_FALSE(majorizes(DegreeSequence{1, 1}, DegreeSequence{3, 1}));
  CHECK(majorizes(DegreeSequence{}, DegreeSequence{}));
  // Unsorted input is treated by value, not position.
  CHECK(majorizes(DegreeSequence{1, 2, 1}, DegreeSequence{0, 2, 2}));
}

TEST_CASE("two-tier representation agrees across the 64-vertex boundary") {
  // A 70-vertex cycle exercises the adjacency-list tier.
  Graph big(70);
  for (int i = 0; i < 70; ++i) big.add_edge(i, (i + 1) % 70);
  CHECK(big.size() == 70);
  CHECK_FALSE(big.fast_tier());
  CHECK(big.degree(13) == 2);
  CHECK(big.neighbors(0) == std::vector<int>{1, 69});
  const auto comps = connected_components(big);
  CHECK(comps.size() == 1);
}

}  // TEST_SUITE
