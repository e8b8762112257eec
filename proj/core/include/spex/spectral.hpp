#pragma once

// Floating-point spectral-radius enclosures (Collatz-Wielandt bounds around
// shifted power iteration, with outward rounding), Perron vectors, closed
// forms for the join-family bounds, equitable-quotient eigenvalues, and
// certified comparisons that fall back to the exact backend.

#include <vector>

#include "spex/charpoly.hpp"
#include "spex/graph.hpp"

namespace spex {

struct RootInterval {
  double lo = 0, hi = 0;  // lo <= rho <= hi
  enum class Method { CollatzWielandt, CharpolyBisection } method =
      Method::CollatzWielandt;
  double width() const { return hi - lo; }
};

struct PerronVector {
  // Per-vertex weights scaled to max entry 1; strictly positive on the
  // component attaining rho, zero elsewhere.
  std::vector<double> weights;
};

struct RhoResult {
  RootInterval interval;
  PerronVector perron;
  bool disconnected = false;  // enclosure is a maximum over components
};

// Encloses rho(g) within `width`.  Power iteration runs on A+I so that
// bipartite spectra cannot oscillate; if the Collatz-Wielandt gap stalls,
// the computation escalates to exact bisection (order <= 64) and otherwise
// reports a PrecisionError.
RhoResult rho_enclosure(const Graph& g, double width = 1e-9);

// Closed-form upper bound for the spectral radius of biclique-minor-free
// graphs: (s+t-3 + sqrt((s+t-3)^2 + 4(s-1)(n-s+1) - 4(s-2)(t-1))) / 2.
// Requires 2 <= s <= t and n >= s+t.
double tait_bound(long long n, int s, int t);

// Spectral radius of the quotient matrix of an equitable partition (each
// vertex of class i has a constant number of neighbors in class j; checked,
// and a ValidationError names the violating vertex and class).  Equals
// rho(g) when g is connected.
double quotient_rho(const Graph& g, const std::vector<std::vector<int>>& classes);

// Largest real root of x^3 - (t-3)x^2 - (2t-2)x + a0*a1, the polynomial
// satisfied by the spectral radius of the extremal order-(t+1) complement
// family split into parts of sizes a0 and a1.  Requires t >= 4,
// a0 + a1 = t-1, a1 even.
double h1t_cubic_root(int t, int a0, int a1);

struct RhoComparison {
  Trichotomy order = Trichotomy::Equal;
  double gap_lower_bound = 0;  // positive for strict verdicts
  bool exact = false;          // verdict came from the exact backend
};

// Orders rho(a) against rho(b): enclosures are refined until disjoint, and
// equality (or stubborn overlap) is settled exactly.
RhoComparison compare_rho(const Graph& a, const Graph& b);

}  // namespace spex
