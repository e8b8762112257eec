#pragma once

// Constructions of the named graph families studied by the library, plus a
// tiny text format ("name" or "name:k=v,k=v") used by the CLI and by stored
// certificates to identify family members.

#include <string>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

// ---- elementary builders ---------------------------------------------------

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);  // complete_bipartite(1, leaves)
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3

// ---- named families --------------------------------------------------------
//
// With beta = floor((t+1)/(s+1)) and alpha = t - (beta-1)(s+1), the star
// forest of parameters (s,t) is (beta-1) copies of K_{1,s} plus one
// K_{1,alpha}; it has t+1 vertices.  Its complement is the densest graph of
// that order with the biclique-minor-freeness property, and subdividing one
// lowest-degree-sum edge of the complement once gives the order-(t+2)
// member used inside near-extremal joins.  These three builders require
// beta >= 2.

Graph star_forest(int s, int t);
Graph star_forest_complement(int s, int t);
Graph subdivided_complement(int s, int t);

Graph petersen();
Graph petersen_complement();

// Order t+2 with t = a+b+c+1 (a >= 0, b,c >= 1): a hub w adjacent to u1 and
// to independent sets A (a vertices) and B (b); u1 also covers A and C (c);
// u2 covers B and C.  2t-1 edges.
Graph h_abc(int a, int b, int c);
Graph h_abc_complement(int a, int b, int c);

// Order t+2 with t = a+b+c+2 (a,b >= 1, c >= 0): triangle w1,w2,u1 with
// pendant sets A on w1, B on w2, C on u1, and u2 covering A, B, C.  2t-1
// edges.
Graph h_prime_abc(int a, int b, int c);

// Decomposition of the part outside the dominating clique: n-s+1 = p*t + q
// with 1 <= q <= t.  Requires n >= s >= 1, t >= 1.
struct TaitShape {
  int p;
  int q;
};
TaitShape tait_shape(int n, int s, int t);

// `cliques` disjoint copies of K_t followed by the given extra components.
Graph clique_blocks(int t, int cliques, const std::vector<Graph>& extras);

// K_{s-1} joined to (p disjoint K_t plus one K_q), where n-s+1 = p*t + q
// with 1 <= q <= t.  Requires n >= s >= 1, t >= 1.
Graph tait_graph(int n, int s, int t);

// Which tail replacement the designated candidate construction uses at
// (n, s, t).  With (p, q) = tait_shape and beta = floor((t+1)/(s+1)):
// q = 2, t = 8, beta = 1 swaps one K_8 + K_2 for the Petersen complement;
// q = beta = 2 swaps one K_t + K_2 for the once-subdivided star-forest
// complement; q <= 2(beta-1) (excluding the previous case) swaps q K_t
// blocks + K_q for q star-forest complements; anything else keeps the plain
// clique tail.  A replacement needing more K_t blocks than available (small
// n) falls through to the next applicable case.
enum class CandidateCase {
  PetersenComplementTail,
  SubdividedComplementTail,
  StarForestComplementTails,
  PlainTait,
};
CandidateCase extremal_candidate_case(int n, int s, int t);

// The graph selected by extremal_candidate_case.
Graph extremal_candidate(int n, int s, int t);

// K_t with one edge subdivided n-t times (n >= t >= 3).
Graph subdivided_clique(int n, int t);

// K_{t+1} minus a perfect matching; t odd.
Graph matching_deleted_clique(int t);

Graph clique_minus_edge(int t);  // t >= 2

// star_forest_complement(1, t), t >= 3: the unique spectral-extremal
// connected graph without a (t+1)-leaf star minor at order t+1.
Graph h1t_complement(int t);

// ---- text form -------------------------------------------------------------

enum class FamilyKind {
  CompleteGraph,
  CompleteBipartite,
  Star,
  Path,
  Cycle,
  StarForest,
  StarForestComplement,
  SubdividedComplement,
  Petersen,
  PetersenComplement,
  Habc,
  HabcComplement,
  HprimeAbc,
  TaitGraph,
  ExtremalCandidate,
  SubdividedClique,
  MatchingDeletedClique,
  CliqueMinusEdge,
  H1tComplement,
};

struct FamilySpec {
  FamilyKind kind;
  // Unused parameters stay -1.
  int n = -1, s = -1, t = -1, a = -1, b = -1, c = -1;

  bool operator==(const FamilySpec&) const = default;
};

FamilySpec parse_family(const std::string& text);   // ParseError on bad text
std::string family_to_string(const FamilySpec& spec);
Graph build_family(const FamilySpec& spec);         // DomainError on bad params

}  // namespace spex
