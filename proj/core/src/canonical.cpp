// Individualization-refinement canonical labeling.
//
// The search keeps an ordered partition of the vertices as bitmask cells.
// Refinement splits cells by neighbor counts into splitter cells until the
// partition is equitable; the split pieces are ordered by ascending count,
// so the refined ordered partition is an isomorphism invariant.  When the
// partition is not discrete, the search individualizes each vertex of the
// first non-singleton cell in turn, skipping vertices that are twins of an
// earlier choice (the transposition is then an automorphism, so the skipped
// subtree repeats earlier leaves).  Each discrete partition yields a
// relabeled adjacency bitstring; the minimum over all leaves is canonical.

#include "spex/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "spex/graph6.hpp"

namespace spex {
namespace {

using Partition = std::vector<std::uint64_t>;

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class Searcher {
public:
  explicit Searcher(const Graph& g) : n_(g.order()) {
    rows_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) rows_.push_back(g.bits(v));
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    Partition start{n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1};
    refine(start);
    descend(start);
    return best_perm_;
  }

private:
  void refine(Partition& p) const {
  restart:
    for (std::size_t si = 0; si < p.size(); ++si) {
      for (std::size_t ci = 0; ci < p.size(); ++ci) {
        if (__builtin_popcountll(p[ci]) <= 1) continue;
        std::array<std::uint64_t, 65> by_count{};
        std::uint64_t m = p[ci];
        while (m != 0) {
          const int v = __builtin_ctzll(m);
          m &= m - 1;
          by_count[static_cast<std::size_t>(
              __builtin_popcountll(rows_[static_cast<std::size_t>(v)] & p[si]))] |=
              bit(v);
        }
        Partition pieces;
        for (const std::uint64_t piece : by_count) {
          if (piece != 0) pieces.push_back(piece);
        }
        if (pieces.size() <= 1) continue;
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(ci));
        p.insert(p.begin() + static_cast<std::ptrdiff_t>(ci), pieces.begin(),
                 pieces.end());
        goto restart;  // cell indices shifted; rescan from scratch
      }
    }
  }

  void descend(const Partition& p) {
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (__builtin_popcountll(p[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == p.size()) {
      record_leaf(p);
      return;
    }

    std::vector<int> tried;
    std::uint64_t m = p[target];
    while (m != 0) {
      const int v = __builtin_ctzll(m);
      m &= m - 1;
      bool twin = false;
      for (const int u : tried) {
        const std::uint64_t outside = ~(bit(u) | bit(v));
        if ((rows_[static_cast<std::size_t>(u)] & outside) ==
            (rows_[static_cast<std::size_t>(v)] & outside)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(v);

      Partition child;
      child.reserve(p.size() + 1);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i == target) {
          child.push_back(bit(v));
          child.push_back(p[i] & ~bit(v));
        } else {
          child.push_back(p[i]);
        }
      }
      refine(child);
      descend(child);
    }
  }

  void record_leaf(const Partition& p) {
    std::vector<int> perm(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < p.size(); ++i) {
      perm[static_cast<std::size_t>(__builtin_ctzll(p[i]))] = static_cast<int>(i);
    }
    std::vector<std::uint64_t> leaf(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v) {
      std::uint64_t m = rows_[static_cast<std::size_t>(v)], r = 0;
      while (m != 0) {
        r |= bit(perm[static_cast<std::size_t>(__builtin_ctzll(m))]);
        m &= m - 1;
      }
      leaf[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = r;
    }
    if (!have_best_ || leaf < best_leaf_) {
      have_best_ = true;
      best_leaf_ = std::move(leaf);
      best_perm_ = std::move(perm);
    }
  }

  int n_;
  std::vector<std::uint64_t> rows_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_leaf_;
  std::vector<int> best_perm_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (!g.fast_tier()) {
    throw CapacityError("canonical labeling supports orders up to " +
                        std::to_string(Graph::kFastCapacity));
  }
  return Searcher(g).run();
}

CanonicalCode canonical_code(const Graph& g) {
  return CanonicalCode{graph6_encode(relabel(g, canonical_labeling(g)))};
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace spex
