// Canonical augmentation, per spex/enumerate.hpp.
//
// Why this generates every class exactly once: if a child C was produced
// from parent P by appending vertex a, the acceptance test demands that
// C minus its canonical-last vertex be isomorphic to C - a = P.  The
// canonical-last vertex is an isomorphism invariant, so the parent class is
// a function of the child class; children surviving from non-isomorphic
// parents can never collide, and collisions under one parent are removed
// with a per-parent code set.  Conversely any class is reached: delete its
// canonical-last vertex, take that parent's representative, and the mask
// reconstructing the deleted vertex yields an accepted child.

#include "spex/enumerate.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "spex/canonical.hpp"
#include "spex/graph6.hpp"
#include "spex/parallel.hpp"

namespace spex {
namespace {

struct Rep {
  Graph g;
  std::string code;  // canonical_code(g).bytes
};

// All accepted, locally deduplicated children of parent (order k-1 -> k),
// in ascending neighborhood-mask order.
std::vector<Rep> children_of(const Rep& parent) {
  const int k = parent.g.order() + 1;
  const int a = k - 1;
  std::vector<Rep> kids;
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a); ++mask) {
    Graph child(k);
    for (const auto& [u, v] : parent.g.edges()) child.add_edge(u, v);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      child.add_edge(__builtin_ctzll(m), a);
    }

    const std::vector<int> perm = canonical_labeling(child);
    int canon_last = -1;
    for (int v = 0; v < k; ++v) {
      if (perm[static_cast<std::size_t>(v)] == k - 1) {
        canon_last = v;
        break;
      }
    }
    if (canon_last != a) {
      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(k - 1));
      for (int v = 0; v < k; ++v) {
        if (v != canon_last) rest.push_back(v);
      }
      if (canonical_code(induced_subgraph(child, rest)).bytes != parent.code) {
        continue;
      }
    }

    std::string code = graph6_encode(relabel(child, perm));
    if (seen.insert(code).second) {
      kids.push_back(Rep{std::move(child), std::move(code)});
    }
  }
  return kids;
}

void expand(const Rep& rep, int n, bool connected_only, const GraphVisitor& visit) {
  if (rep.g.order() == n) {
    if (!connected_only || is_connected(rep.g)) visit(rep.g);
    return;
  }
  for (const Rep& kid : children_of(rep)) expand(kid, n, connected_only, visit);
}

std::vector<Rep> reps_of_order(int k) {
  std::vector<Rep> out{Rep{Graph(1), canonical_code(Graph(1)).bytes}};
  for (int level = 2; level <= k; ++level) {
    std::vector<Rep> next;
    for (const Rep& r : out) {
      for (Rep& kid : children_of(r)) next.push_back(std::move(kid));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

void enumerate_graphs(int n, bool connected_only, const GraphVisitor& visit) {
  if (n < 1 || n > 10) {
    throw DomainError("enumeration order must be in [1, 10], got " +
                      std::to_string(n));
  }

  const int threads = thread_count();
  if (threads <= 1 || n <= 6) {
    expand(Rep{Graph(1), canonical_code(Graph(1)).bytes}, n, connected_only, visit);
    return;
  }

  // Parallel mode: split the generation tree at order 5, run each subtree on
  // the pool, and emit buffered results in subtree order so the visit
  // sequence matches the sequential one.
  const std::vector<Rep> roots = reps_of_order(5);
  std::vector<std::vector<Graph>> buffers(roots.size());
  parallel_for_index(roots.size(), threads, [&](std::size_t i) {
    expand(roots[i], n, connected_only,
           [&](const Graph& g) { buffers[i].push_back(g); });
  });
  for (const auto& buffer : buffers) {
    for (const Graph& g : buffer) visit(g);
  }
}

long long count_graphs(int n, bool connected_only) {
  long long count = 0;
  enumerate_graphs(n, connected_only, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace spex
