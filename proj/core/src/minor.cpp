// Minor containment search, per spex/minor.hpp.
//
// Star patterns use the boundary characterization: K_{1,r} is a minor iff
// some connected set S has |N(S)| >= r (the leaf branch sets of any star
// model can be shrunk to single boundary vertices).  Connected sets are
// enumerated once each by rooted growth with banned-vertex splitting.
//
// Other patterns use branch-set growth: place one root vertex per pattern
// vertex (all combinations, with ascending roots inside pattern twin
// classes, since swapping twin branch sets is a pattern automorphism), then
// repeatedly take the first pattern edge with no host edge between its two
// branch sets and try every extension of either side by an adjacent unused
// vertex.  If a model extending the current state exists, some branch keeps
// that invariant: a connected superset B of S reaches S's complement in B,
// and when both sides are already complete the edge cannot be unsatisfied.
//
// Brute-force mode ignores all of the above and backtracks over every tuple
// of pairwise-disjoint connected sets; it exists to check the fast path.

#include "spex/minor.hpp"

#include <algorithm>
#include <cstdint>

#include "spex/families.hpp"
#include "spex/graph6.hpp"

namespace spex {
namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
}

std::vector<int> mask_to_list(std::uint64_t m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

std::uint64_t row_union(const Graph& g, std::uint64_t set) {
  std::uint64_t out = 0;
  for (std::uint64_t m = set; m != 0; m &= m - 1) out |= g.bits(__builtin_ctzll(m));
  return out;
}

void require_fast_host(const Graph& host) {
  if (!host.fast_tier()) {
    throw CapacityError("minor search hosts are limited to order " +
                        std::to_string(Graph::kFastCapacity));
  }
}

// ---- star boundary search --------------------------------------------------

struct StarSearch {
  const Graph& g;
  int leaves;
  std::uint64_t winner_set = 0;
  bool found = false;

  // Enumerates every connected set containing `root` but no banned vertex,
  // stopping early once a set with large enough boundary appears.
  void grow(std::uint64_t set, std::uint64_t nbr, std::uint64_t banned) {
    if (found) return;
    if (__builtin_popcountll(nbr) >= leaves) {
      winner_set = set;
      found = true;
      return;
    }
    if (__builtin_popcountll(set) >= g.order() - leaves) return;
    std::uint64_t ext = nbr & ~banned;
    while (ext != 0 && !found) {
      const int v = __builtin_ctzll(ext);
      ext &= ext - 1;
      banned |= bit(v);
      grow(set | bit(v), (nbr | g.bits(v)) & ~(set | bit(v)), banned);
    }
  }

  std::optional<BranchModel> run() {
    const int n = g.order();
    if (n < leaves + 1) return std::nullopt;
    // Banned (previously rooted) vertices may not join S, but they still
    // count toward the boundary |N(S)|, so the neighbor mask keeps them.
    std::uint64_t banned = 0;
    for (int root = 0; root < n && !found; ++root) {
      grow(bit(root), g.bits(root), banned);
      banned |= bit(root);
    }
    if (!found) return std::nullopt;
    BranchModel model;
    model.branch_sets.push_back(mask_to_list(winner_set));
    const std::vector<int> boundary =
        mask_to_list(row_union(g, winner_set) & ~winner_set);
    for (int i = 0; i < leaves; ++i) {
      model.branch_sets.push_back({boundary[static_cast<std::size_t>(i)]});
    }
    return model;
  }
};

// ---- branch-set growth -----------------------------------------------------

struct GrowthSearch {
  const Graph& host;
  const Graph& pat;
  int k;
  std::vector<int> porder;                      // pattern vertices, degree-descending
  std::vector<int> twin_prev;                   // per porder position, or -1
  std::vector<std::pair<int, int>> pedges;      // pattern edges
  std::vector<std::uint64_t> sets;              // per pattern vertex
  std::uint64_t used = 0;
  bool found = false;

  explicit GrowthSearch(const Graph& h, const Graph& p)
      : host(h), pat(p), k(p.order()), sets(static_cast<std::size_t>(p.order()), 0) {
    for (int v = 0; v < k; ++v) porder.push_back(v);
    std::stable_sort(porder.begin(), porder.end(), [&](int x, int y) {
      return pat.degree(x) > pat.degree(y);
    });
    twin_prev.assign(static_cast<std::size_t>(k), -1);
    for (int i = 0; i < k; ++i) {
      for (int j = i - 1; j >= 0; --j) {
        const int x = porder[static_cast<std::size_t>(i)];
        const int y = porder[static_cast<std::size_t>(j)];
        const std::uint64_t outside = ~(bit(x) | bit(y));
        if ((pat.bits(x) & outside) == (pat.bits(y) & outside)) {
          twin_prev[static_cast<std::size_t>(i)] = j;
          break;
        }
      }
    }
    pedges = pat.edges();
  }

  void place_roots(int i) {
    if (found) return;
    if (i == k) {
      repair();
      return;
    }
    if (host.order() - __builtin_popcountll(used) < k - i) return;
    const int pv = porder[static_cast<std::size_t>(i)];
    int lowest = 0;
    if (twin_prev[static_cast<std::size_t>(i)] >= 0) {
      const int prev_pv =
          porder[static_cast<std::size_t>(twin_prev[static_cast<std::size_t>(i)])];
      lowest = __builtin_ctzll(sets[static_cast<std::size_t>(prev_pv)]) + 1;
    }
    for (int r = lowest; r < host.order(); ++r) {
      if ((used >> r) & 1) continue;
      sets[static_cast<std::size_t>(pv)] = bit(r);
      used |= bit(r);
      place_roots(i + 1);
      if (found) return;  // keep the state for model extraction
      used &= ~bit(r);
      sets[static_cast<std::size_t>(pv)] = 0;
    }
  }

  void repair() {
    if (found) return;
    for (const auto& [x, y] : pedges) {
      const std::uint64_t sx = sets[static_cast<std::size_t>(x)];
      const std::uint64_t sy = sets[static_cast<std::size_t>(y)];
      if ((row_union(host, sx) & sy) != 0) continue;
      for (const int side : {x, y}) {
        std::uint64_t cand =
            row_union(host, sets[static_cast<std::size_t>(side)]) & ~used;
        while (cand != 0) {
          const int w = __builtin_ctzll(cand);
          cand &= cand - 1;
          sets[static_cast<std::size_t>(side)] |= bit(w);
          used |= bit(w);
          repair();
          if (found) return;  // keep the state for model extraction
          used &= ~bit(w);
          sets[static_cast<std::size_t>(side)] &= ~bit(w);
        }
      }
      return;  // this edge is unsatisfiable from the current state
    }
    found = true;  // every pattern edge is satisfied
  }

  std::optional<BranchModel> run() {
    if (host.order() < k || host.size() < pat.size()) return std::nullopt;
    place_roots(0);
    if (!found) return std::nullopt;
    BranchModel model;
    for (int v = 0; v < k; ++v) {
      model.branch_sets.push_back(mask_to_list(sets[static_cast<std::size_t>(v)]));
    }
    return model;
  }
};

// ---- brute force -----------------------------------------------------------

struct ConnectedSet {
  std::uint64_t set;
  std::uint64_t nbr;
};

// `nbr` is the set's complete outside neighborhood and is what gets stored;
// `banned` only restricts which neighbors may *extend* the set (vertices
// below the root, and siblings already branched on), which is what makes
// every connected set appear exactly once.
void collect_connected_sets(const Graph& g, std::uint64_t set, std::uint64_t nbr,
                            std::uint64_t banned, std::vector<ConnectedSet>& out) {
  out.push_back({set, nbr});
  std::uint64_t ext = nbr & ~banned;
  while (ext != 0) {
    const int v = __builtin_ctzll(ext);
    ext &= ext - 1;
    banned |= bit(v);
    collect_connected_sets(g, set | bit(v), (nbr | g.bits(v)) & ~(set | bit(v)),
                           banned, out);
  }
}

std::vector<ConnectedSet> all_connected_sets(const Graph& g) {
  std::vector<ConnectedSet> out;
  std::uint64_t banned = 0;
  for (int root = 0; root < g.order(); ++root) {
    collect_connected_sets(g, bit(root), g.bits(root), banned, out);
    banned |= bit(root);
  }
  return out;
}

struct BruteSearch {
  const Graph& pat;
  std::vector<ConnectedSet> sets;
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> chosen_nbr;
  bool found = false;

  BruteSearch(const Graph& host, const Graph& p)
      : pat(p), sets(all_connected_sets(host)) {}

  void place(int i, std::uint64_t used) {
    if (found) return;
    if (i == pat.order()) {
      found = true;
      return;
    }
    for (const ConnectedSet& c : sets) {
      if ((c.set & used) != 0) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (pat.adjacent(i, j) &&
            (chosen_nbr[static_cast<std::size_t>(j)] & c.set) == 0) {
          ok = false;
        }
      }
      if (!ok) continue;
      chosen.push_back(c.set);
      chosen_nbr.push_back(c.nbr);
      place(i + 1, used | c.set);
      if (found) return;
      chosen.pop_back();
      chosen_nbr.pop_back();
    }
  }

  std::optional<BranchModel> run() {
    place(0, 0);
    if (!found) return std::nullopt;
    BranchModel model;
    for (const std::uint64_t s : chosen) model.branch_sets.push_back(mask_to_list(s));
    return model;
  }
};

// ---- witness post-processing ----------------------------------------------

BranchModel minimize_model(const Graph& host, const MinorPattern& pattern,
                           BranchModel model) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t s = 0; s < model.branch_sets.size() && !shrunk; ++s) {
      if (model.branch_sets[s].size() <= 1) continue;
      for (std::size_t i = 0; i < model.branch_sets[s].size(); ++i) {
        BranchModel trial = model;
        auto& tset = trial.branch_sets[s];
        tset.erase(tset.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_valid_model(host, pattern, trial)) {
          model = std::move(trial);
          shrunk = true;
          break;
        }
      }
    }
  }
  return model;
}

}  // namespace

// ---- MinorPattern ----------------------------------------------------------

MinorPattern MinorPattern::explicit_graph(Graph g) {
  MinorPattern p;
  p.kind = Kind::Explicit;
  p.graph = std::move(g);
  return p;
}

MinorPattern MinorPattern::star_pattern(int leaves) {
  if (leaves < 1) throw DomainError("star pattern needs >= 1 leaf");
  MinorPattern p;
  p.kind = Kind::Star;
  p.a = 1;
  p.b = leaves;
  p.graph = star(leaves);
  return p;
}

MinorPattern MinorPattern::biclique(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("biclique pattern needs sides >= 1");
  MinorPattern p;
  p.kind = Kind::Biclique;
  p.a = a;
  p.b = b;
  p.graph = complete_bipartite(a, b);
  return p;
}

MinorPattern MinorPattern::parse(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("minor pattern '" + text + "' is missing ':'");
  }
  const std::string name = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  try {
    if (name == "star") {
      std::size_t used = 0;
      const int leaves = std::stoi(rest, &used);
      if (used != rest.size()) throw ParseError("star pattern wants 'star:<leaves>'");
      return star_pattern(leaves);
    }
    if (name == "biclique") {
      const std::size_t comma = rest.find(',');
      if (comma == std::string::npos) {
        throw ParseError("biclique pattern wants 'biclique:<a>,<b>'");
      }
      std::size_t ua = 0, ub = 0;
      const std::string sa = rest.substr(0, comma), sb = rest.substr(comma + 1);
      const int a = std::stoi(sa, &ua);
      const int b = std::stoi(sb, &ub);
      if (ua != sa.size() || ub != sb.size()) {
        throw ParseError("biclique pattern wants 'biclique:<a>,<b>'");
      }
      return biclique(a, b);
    }
    if (name == "explicit") return explicit_graph(graph6_decode(rest));
  } catch (const std::invalid_argument&) {
    throw ParseError("minor pattern '" + text + "' has a malformed number");
  } catch (const std::out_of_range&) {
    throw ParseError("minor pattern '" + text + "' has an out-of-range number");
  }
  throw ParseError("unknown minor pattern kind '" + name + "'");
}

std::string MinorPattern::to_string() const {
  switch (kind) {
    case Kind::Star: return "star:" + std::to_string(b);
    case Kind::Biclique:
      return "biclique:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Explicit: return "explicit:" + graph6_encode(graph);
  }
  throw DomainError("unknown minor pattern kind");
}

// ---- public entry points ---------------------------------------------------

bool is_valid_model(const Graph& host, const MinorPattern& pattern,
                    const BranchModel& model) {
  const Graph& pat = pattern.graph;
  if (static_cast<int>(model.branch_sets.size()) != pat.order()) return false;
  std::vector<bool> used(static_cast<std::size_t>(host.order()), false);
  for (const auto& set : model.branch_sets) {
    if (set.empty()) return false;
    for (const int v : set) {
      if (v < 0 || v >= host.order() || used[static_cast<std::size_t>(v)]) {
        return false;
      }
      used[static_cast<std::size_t>(v)] = true;
    }
    if (!is_connected(induced_subgraph(host, set))) return false;
  }
  for (const auto& [x, y] : pat.edges()) {
    bool crossed = false;
    for (const int u : model.branch_sets[static_cast<std::size_t>(x)]) {
      for (const int v : model.branch_sets[static_cast<std::size_t>(y)]) {
        if (host.adjacent(u, v)) {
          crossed = true;
          break;
        }
      }
      if (crossed) break;
    }
    if (!crossed) return false;
  }
  return true;
}

std::optional<BranchModel> find_minor(const Graph& host, const MinorPattern& pattern,
                                      MinorSearchMode mode) {
  require_fast_host(host);
  if (!pattern.graph.fast_tier()) {
    throw CapacityError("minor patterns are limited to order " +
                        std::to_string(Graph::kFastCapacity));
  }
  if (pattern.graph.order() == 0) return BranchModel{};

  std::optional<BranchModel> model;
  if (mode == MinorSearchMode::BruteForce) {
    if (host.order() > 8) {
      throw CapacityError("brute-force minor search is limited to host order 8");
    }
    model = BruteSearch(host, pattern.graph).run();
  } else if (pattern.kind == MinorPattern::Kind::Star ||
             (pattern.kind == MinorPattern::Kind::Biclique && pattern.a == 1)) {
    model = StarSearch{host, pattern.b}.run();
  } else {
    model = GrowthSearch(host, pattern.graph).run();
  }
  if (!model) return std::nullopt;

  *model = minimize_model(host, pattern, std::move(*model));
  if (!is_valid_model(host, pattern, *model)) {
    throw ValidationError("minor search produced an invalid branch model");
  }
  return model;
}

bool has_minor(const Graph& host, const MinorPattern& pattern, MinorSearchMode mode) {
  return find_minor(host, pattern, mode).has_value();
}

bool has_st_property(const Graph& g, int s, int t) {
  if (s < 1 || t < s) {
    throw DomainError("the freeness property needs 1 <= s <= t");
  }
  const int gamma = std::min(s, (t + 1) / 2);
  for (const auto& comp : connected_components(g)) {
    const int c = static_cast<int>(comp.size());
    if (c <= t) continue;  // too few vertices for any K_{a,b}, a+b = t+1
    const Graph sub = induced_subgraph(g, comp);
    if (c == t + 1) {
      for (const auto& cc : connected_components(complement(sub))) {
        if (static_cast<int>(cc.size()) <= gamma) return false;
      }
      continue;
    }
    for (int a = 1; a <= gamma; ++a) {
      const MinorPattern pattern = a == 1 ? MinorPattern::star_pattern(t)
                                          : MinorPattern::biclique(a, t + 1 - a);
      if (has_minor(sub, pattern)) return false;
    }
  }
  return true;
}

bool has_st_property_by_definition(const Graph& g, int s, int t) {
  if (s < 1 || t < s) {
    throw DomainError("the freeness property needs 1 <= s <= t");
  }
  const int gamma = std::min(s, (t + 1) / 2);
  for (int a = 1; a <= gamma; ++a) {
    const MinorPattern pattern = a == 1 ? MinorPattern::star_pattern(t)
                                        : MinorPattern::biclique(a, t + 1 - a);
    if (has_minor(g, pattern)) return false;
  }
  return true;
}

bool dominated_join_check(const Graph& r, int s, int t) {
  return has_st_property(r, s, t);
}

}  // namespace spex
