// Builders for the named graph families, and the "name:k=v,..." text form.

#include "spex/families.hpp"

#include <array>
#include <sstream>
#include <utility>

namespace spex {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

struct StarForestShape {
  int beta;
  int alpha;
};

StarForestShape star_forest_shape(int s, int t) {
  require(s >= 1, "star forest needs s >= 1");
  require(t >= s, "star forest needs t >= s");
  const int beta = (t + 1) / (s + 1);
  const int alpha = t - (beta - 1) * (s + 1);
  require(beta >= 2, "star forest parameters need floor((t+1)/(s+1)) >= 2");
  return {beta, alpha};
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 0, "complete graph order must be >= 0");
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "bipartite side sizes must be >= 0");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph path_graph(int n) {
  require(n >= 0, "path order must be >= 0");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle order must be >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_forest(int s, int t) {
  const auto [beta, alpha] = star_forest_shape(s, t);
  std::vector<Graph> stars(static_cast<std::size_t>(beta - 1), star(s));
  stars.push_back(star(alpha));
  return disjoint_union(stars);
}

Graph star_forest_complement(int s, int t) {
  return complement(star_forest(s, t));
}

Graph subdivided_complement(int s, int t) {
  return subdivide_min_edge(star_forest_complement(s, t), 1);
}

Graph petersen() {
  // Vertices are the 2-subsets of {0..4} in lexicographic order; edges join
  // disjoint pairs.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  }
  Graph g(10);
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      const auto [a, b] = pairs[x];
      const auto [c, d] = pairs[y];
      if (a != c && a != d && b != c && b != d) {
        g.add_edge(static_cast<int>(x), static_cast<int>(y));
      }
    }
  }
  return g;
}

Graph petersen_complement() { return complement(petersen()); }

Graph h_abc(int a, int b, int c) {
  require(a >= 0, "h_abc needs a >= 0");
  require(b >= 1 && c >= 1, "h_abc needs b, c >= 1");
  const int w = 0, u1 = 1, u2 = 2;
  const int a0 = 3, b0 = a0 + a, c0 = b0 + b;
  Graph g(c0 + c);
  g.add_edge(w, u1);
  for (int v = a0; v < b0; ++v) {
    g.add_edge(w, v);
    g.add_edge(u1, v);
  }
  for (int v = b0; v < c0; ++v) {
    g.add_edge(w, v);
    g.add_edge(u2, v);
  }
  for (int v = c0; v < c0 + c; ++v) {
    g.add_edge(u1, v);
    g.add_edge(u2, v);
  }
  return g;
}

Graph h_abc_complement(int a, int b, int c) { return complement(h_abc(a, b, c)); }

Graph h_prime_abc(int a, int b, int c) {
  require(a >= 1 && b >= 1, "h_prime needs a, b >= 1");
  require(c >= 0, "h_prime needs c >= 0");
  const int w1 = 0, w2 = 1, u1 = 2, u2 = 3;
  const int a0 = 4, b0 = a0 + a, c0 = b0 + b;
  Graph g(c0 + c);
  g.add_edge(w1, w2);
  g.add_edge(w1, u1);
  g.add_edge(w2, u1);
  for (int v = a0; v < b0; ++v) {
    g.add_edge(w1, v);
    g.add_edge(u2, v);
  }
  for (int v = b0; v < c0; ++v) {
    g.add_edge(w2, v);
    g.add_edge(u2, v);
  }
  for (int v = c0; v < c0 + c; ++v) {
    g.add_edge(u1, v);
    g.add_edge(u2, v);
  }
  return g;
}

TaitShape tait_shape(int n, int s, int t) {
  require(s >= 1, "tait graph needs s >= 1");
  require(t >= 1, "tait graph needs t >= 1");
  require(n >= s, "tait graph needs n >= s");
  const int m = n - s + 1;
  const int q = (m - 1) % t + 1;
  return {(m - q) / t, q};
}

Graph clique_blocks(int t, int cliques, const std::vector<Graph>& extras) {
  std::vector<Graph> parts(static_cast<std::size_t>(cliques), complete_graph(t));
  for (const Graph& piece : extras) parts.push_back(piece);
  return disjoint_union(parts);
}

namespace {

Graph clique_blocks_with_tail(int s, int t, int cliques, const std::vector<Graph>& tail) {
  return join(complete_graph(s - 1), clique_blocks(t, cliques, tail));
}

}  // namespace

Graph tait_graph(int n, int s, int t) {
  const auto [p, q] = tait_shape(n, s, t);
  return clique_blocks_with_tail(s, t, p, {complete_graph(q)});
}

CandidateCase extremal_candidate_case(int n, int s, int t) {
  require(s >= 2, "extremal candidate needs s >= 2");
  require(t >= s, "extremal candidate needs t >= s");
  const auto [p, q] = tait_shape(n, s, t);
  const int beta = (t + 1) / (s + 1);

  if (q == 2 && t == 8 && beta == 1 && p >= 1) {
    return CandidateCase::PetersenComplementTail;
  }
  if (q == 2 && beta == 2 && p >= 1) {
    return CandidateCase::SubdividedComplementTail;
  }
  if (q <= 2 * (beta - 1) && !(q == 2 && beta == 2) && p >= q) {
    return CandidateCase::StarForestComplementTails;
  }
  return CandidateCase::PlainTait;
}

Graph extremal_candidate(int n, int s, int t) {
  const auto [p, q] = tait_shape(n, s, t);
  switch (extremal_candidate_case(n, s, t)) {
    case CandidateCase::PetersenComplementTail:
      return clique_blocks_with_tail(s, t, p - 1, {petersen_complement()});
    case CandidateCase::SubdividedComplementTail:
      return clique_blocks_with_tail(s, t, p - 1, {subdivided_complement(s, t)});
    case CandidateCase::StarForestComplementTails:
      return clique_blocks_with_tail(
          s, t, p - q,
          std::vector<Graph>(static_cast<std::size_t>(q),
                             star_forest_complement(s, t)));
    case CandidateCase::PlainTait:
      break;
  }
  return tait_graph(n, s, t);
}

Graph subdivided_clique(int n, int t) {
  require(t >= 3, "subdivided clique needs t >= 3");
  require(n >= t, "subdivided clique needs n >= t");
  return subdivide_min_edge(complete_graph(t), n - t);
}

Graph matching_deleted_clique(int t) {
  require(t >= 1 && t % 2 == 1, "matching-deleted clique needs odd t");
  Graph g = complete_graph(t + 1);
  for (int i = 0; i + 1 <= t; i += 2) g.remove_edge(i, i + 1);
  return g;
}

Graph clique_minus_edge(int t) {
  require(t >= 2, "clique minus edge needs t >= 2");
  Graph g = complete_graph(t);
  g.remove_edge(0, 1);
  return g;
}

Graph h1t_complement(int t) {
  require(t >= 3, "h1t complement needs t >= 3");
  return star_forest_complement(1, t);
}

// ---- text form -------------------------------------------------------------

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  const char* params;  // subset of "nstabc", in canonical print order
};

constexpr std::array<KindInfo, 19> kKinds{{
    {FamilyKind::CompleteGraph, "complete", "n"},
    {FamilyKind::CompleteBipartite, "completebipartite", "ab"},
    {FamilyKind::Star, "star", "t"},
    {FamilyKind::Path, "path", "n"},
    {FamilyKind::Cycle, "cycle", "n"},
    {FamilyKind::StarForest, "starforest", "st"},
    {FamilyKind::StarForestComplement, "starforestcomplement", "st"},
    {FamilyKind::SubdividedComplement, "subdividedcomplement", "st"},
    {FamilyKind::Petersen, "petersen", ""},
    {FamilyKind::PetersenComplement, "petersencomplement", ""},
    {FamilyKind::Habc, "habc", "abc"},
    {FamilyKind::HabcComplement, "habccomplement", "abc"},
    {FamilyKind::HprimeAbc, "hprime", "abc"},
    {FamilyKind::TaitGraph, "tait", "nst"},
    {FamilyKind::ExtremalCandidate, "extremal", "nst"},
    {FamilyKind::SubdividedClique, "subdividedclique", "nt"},
    {FamilyKind::MatchingDeletedClique, "matchingdeletedclique", "t"},
    {FamilyKind::CliqueMinusEdge, "cliqueminusedge", "t"},
    {FamilyKind::H1tComplement, "h1tcomplement", "t"},
}};

const KindInfo& info_for(FamilyKind kind) {
  for (const KindInfo& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw DomainError("unknown family kind");
}

int& field(FamilySpec& spec, char key) {
  switch (key) {
    case 'n': return spec.n;
    case 's': return spec.s;
    case 't': return spec.t;
    case 'a': return spec.a;
    case 'b': return spec.b;
    case 'c': return spec.c;
    default: throw ParseError(std::string("unknown family parameter '") + key + "'");
  }
}

int field_value(const FamilySpec& spec, char key) {
  FamilySpec copy = spec;
  return field(copy, key);
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const KindInfo* found = nullptr;
  for (const KindInfo& k : kKinds) {
    if (name == k.name) {
      found = &k;
      break;
    }
  }
  if (found == nullptr) throw ParseError("unknown family name '" + name + "'");

  FamilySpec spec;
  spec.kind = found->kind;
  std::string expected = found->params;
  std::string seen;
  if (colon != std::string::npos) {
    std::istringstream rest(text.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ParseError("family parameter '" + item + "' is not key=value");
      }
      const std::string key = item.substr(0, eq);
      if (key.size() != 1 || expected.find(key[0]) == std::string::npos) {
        throw ParseError("family '" + name + "' does not take parameter '" + key +
                         "'");
      }
      if (seen.find(key[0]) != std::string::npos) {
        throw ParseError("family parameter '" + key + "' given twice");
      }
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item.substr(eq + 1), &used);
      } catch (const std::exception&) {
        throw ParseError("family parameter '" + item + "' has a non-integer value");
      }
      if (used != item.size() - eq - 1) {
        throw ParseError("family parameter '" + item + "' has a non-integer value");
      }
      field(spec, key[0]) = value;
      seen.push_back(key[0]);
    }
  }
  for (const char key : expected) {
    if (seen.find(key) == std::string::npos) {
      throw ParseError("family '" + name + "' is missing parameter '" +
                       std::string(1, key) + "'");
    }
  }
  return spec;
}

std::string family_to_string(const FamilySpec& spec) {
  const KindInfo& k = info_for(spec.kind);
  std::string out = k.name;
  const std::string params = k.params;
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += params[i];
    out += '=';
    out += std::to_string(field_value(spec, params[i]));
  }
  return out;
}

Graph build_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::CompleteGraph: return complete_graph(spec.n);
    case FamilyKind::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
    case FamilyKind::Star: return star(spec.t);
    case FamilyKind::Path: return path_graph(spec.n);
    case FamilyKind::Cycle: return cycle_graph(spec.n);
    case FamilyKind::StarForest: return star_forest(spec.s, spec.t);
    case FamilyKind::StarForestComplement:
      return star_forest_complement(spec.s, spec.t);
    case FamilyKind::SubdividedComplement:
      return subdivided_complement(spec.s, spec.t);
    case FamilyKind::Petersen: return petersen();
    case FamilyKind::PetersenComplement: return petersen_complement();
    case FamilyKind::Habc: return h_abc(spec.a, spec.b, spec.c);
    case FamilyKind::HabcComplement:
      return h_abc_complement(spec.a, spec.b, spec.c);
    case FamilyKind::HprimeAbc: return h_prime_abc(spec.a, spec.b, spec.c);
    case FamilyKind::TaitGraph: return tait_graph(spec.n, spec.s, spec.t);
    case FamilyKind::ExtremalCandidate:
      return extremal_candidate(spec.n, spec.s, spec.t);
    case FamilyKind::SubdividedClique: return subdivided_clique(spec.n, spec.t);
    case FamilyKind::MatchingDeletedClique:
      return matching_deleted_clique(spec.t);
    case FamilyKind::CliqueMinusEdge: return clique_minus_edge(spec.t);
    case FamilyKind::H1tComplement: return h1t_complement(spec.t);
  }
  throw DomainError("unknown family kind");
}

}  // namespace spex
