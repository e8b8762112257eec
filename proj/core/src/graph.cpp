// Graph storage and the structural operations declared in spex/graph.hpp.

#include "spex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace spex {
namespace {

std::string edge_name(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kGeneralCapacity) {
    throw CapacityError("graph order " + std::to_string(n) + " outside [0, " +
                        std::to_string(kGeneralCapacity) + "]");
  }
  if (fast_tier()) {
    rows_.assign(static_cast<std::size_t>(n), 0);
  } else {
    adj_.assign(static_cast<std::size_t>(n), {});
  }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " outside graph of order " +
                      std::to_string(n_));
  }
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  if (fast_tier()) {
    return (rows_[static_cast<std::size_t>(u)] >> v) & 1u;
  }
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw DomainError("duplicate edge " + edge_name(u, v));
  if (fast_tier()) {
    rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  } else {
    auto& ru = adj_[static_cast<std::size_t>(u)];
    ru.insert(std::lower_bound(ru.begin(), ru.end(), v), v);
    auto& rv = adj_[static_cast<std::size_t>(v)];
    rv.insert(std::lower_bound(rv.begin(), rv.end(), u), u);
  }
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacent(u, v)) throw DomainError("missing edge " + edge_name(u, v));
  if (fast_tier()) {
    rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  } else {
    auto& ru = adj_[static_cast<std::size_t>(u)];
    ru.erase(std::lower_bound(ru.begin(), ru.end(), v));
    auto& rv = adj_[static_cast<std::size_t>(v)];
    rv.erase(std::lower_bound(rv.begin(), rv.end(), u));
  }
  --edge_count_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  if (fast_tier()) return __builtin_popcountll(rows_[static_cast<std::size_t>(v)]);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::uint64_t Graph::bits(int v) const {
  check_vertex(v);
  if (!fast_tier()) {
    throw CapacityError("bitmask rows only exist for orders <= " +
                        std::to_string(kFastCapacity));
  }
  return rows_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  if (!fast_tier()) return adj_[static_cast<std::size_t>(v)];
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree(v)));
  for_neighbors(v, [&](int w) { out.push_back(w); });
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u) {
    for_neighbors(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || edge_count_ != other.edge_count_) return false;
  if (fast_tier()) return rows_ == other.rows_;
  return adj_ == other.adj_;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

Graph join(const Graph& g, const Graph& h) {
  Graph j = disjoint_union(g, h);
  const int ng = g.order();
  for (int u = 0; u < ng; ++u) {
    for (int v = 0; v < h.order(); ++v) j.add_edge(u, ng + v);
  }
  return j;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  return disjoint_union(std::vector<Graph>{g, h});
}

Graph disjoint_union(const std::vector<Graph>& parts) {
  long long total = 0;
  for (const Graph& p : parts) total += p.order();
  if (total > Graph::kGeneralCapacity) {
    throw CapacityError("disjoint union of order " + std::to_string(total) +
                        " exceeds capacity");
  }
  Graph u(static_cast<int>(total));
  int offset = 0;
  for (const Graph& p : parts) {
    for (const auto& [a, b] : p.edges()) u.add_edge(offset + a, offset + b);
    offset += p.order();
  }
  return u;
}

Graph subdivide_min_edge(const Graph& g, int k) {
  if (k < 0) throw DomainError("subdivision count must be >= 0");
  if (g.size() == 0) throw DomainError("cannot subdivide an edgeless graph");
  if (k == 0) return g;

  int bu = -1, bv = -1, best = -1;
  for (const auto& [u, v] : g.edges()) {
    const int weight = g.degree(u) + g.degree(v);
    if (best < 0 || weight < best) {
      best = weight;
      bu = u;
      bv = v;
    }
    // edges() is lexicographic, so ties keep the earlier pair automatically
  }

  const int n = g.order();
  Graph s(n + k);
  for (const auto& [u, v] : g.edges()) {
    if (u == bu && v == bv) continue;
    s.add_edge(u, v);
  }
  int prev = bu;
  for (int i = 0; i < k; ++i) {
    s.add_edge(prev, n + i);
    prev = n + i;
  }
  s.add_edge(prev, bv);
  return s;
}

Graph rotate_edge(const Graph& g, int u, int v, int w) {
  if (!g.adjacent(v, w)) {
    throw DomainError("rotation needs edge " + edge_name(v, w) + " present");
  }
  if (g.adjacent(u, w)) {
    throw DomainError("rotation needs edge " + edge_name(u, w) + " absent");
  }
  if (u == w) throw DomainError("rotation endpoints u and w must differ");
  Graph r = g;
  r.remove_edge(v, w);
  r.add_edge(u, w);
  return r;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> where(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order()) {
      throw DomainError("induced subgraph vertex " + std::to_string(v) +
                        " outside graph");
    }
    if (where[static_cast<std::size_t>(v)] != -1) {
      throw DomainError("induced subgraph vertex " + std::to_string(v) +
                        " listed twice");
    }
    where[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  Graph s(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    g.for_neighbors(vertices[i], [&](int w) {
      const int j = where[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) s.add_edge(static_cast<int>(i), j);
    });
  }
  return s;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) {
    throw DomainError("relabeling has wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw DomainError("relabeling is not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  Graph r(n);
  for (const auto& [u, v] : g.edges()) {
    r.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return r;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(start);
    comp[static_cast<std::size_t>(start)] = id;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      out.back().push_back(v);
      g.for_neighbors(v, [&](int w) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          q.push(w);
        }
      });
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return static_cast<int>(connected_components(g)[0].size()) == g.order();
}

namespace {

// Sorts descending and pads the shorter sequence with zeros.
std::pair<std::vector<long long>, std::vector<long long>> aligned(
    std::vector<long long> x, std::vector<long long> y) {
  std::sort(x.begin(), x.end(), std::greater<long long>());
  std::sort(y.begin(), y.end(), std::greater<long long>());
  const std::size_t len = std::max(x.size(), y.size());
  x.resize(len, 0);
  y.resize(len, 0);
  return {std::move(x), std::move(y)};
}

}  // namespace

bool weak_majorizes(const std::vector<long long>& x, const std::vector<long long>& y) {
  auto [a, b] = aligned(x, y);
  long long sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool majorizes(const std::vector<long long>& x, const std::vector<long long>& y) {
  const long long tx = std::accumulate(x.begin(), x.end(), 0LL);
  const long long ty = std::accumulate(y.begin(), y.end(), 0LL);
  return tx == ty && weak_majorizes(x, y);
}

namespace {

std::vector<long long> widen(const DegreeSequence& d) {
  return std::vector<long long>(d.begin(), d.end());
}

}  // namespace

bool weak_majorizes(const DegreeSequence& x, const DegreeSequence& y) {
  return weak_majorizes(widen(x), widen(y));
}

bool majorizes(const DegreeSequence& x, const DegreeSequence& y) {
  return majorizes(widen(x), widen(y));
}

}  // namespace spex
