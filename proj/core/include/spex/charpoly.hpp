#pragma once

// Exact spectral computations: integer characteristic polynomials of
// adjacency matrices, Sturm-chain root counting over rationals, and
// arbitrarily tight rational enclosures of / exact comparisons between
// largest eigenvalues.

#include <gmpxx.h>

#include <vector>

#include "spex/graph.hpp"

namespace spex {

struct CharPoly {
  // Ascending coefficients of a monic integer polynomial: coeffs[i] is the
  // coefficient of x^i, coeffs.back() == 1.
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpq_class operator()(const mpq_class& x) const;
};

// det(xI - A); validated internally via the trace and the Cayley-Hamilton
// residual.  Orders up to 64.
CharPoly char_poly(const Graph& g);

// det(xI - M) for an arbitrary integer k x k matrix in row-major order.
CharPoly char_poly_matrix(const std::vector<long>& rowmajor, int k);

class SturmChain {
public:
  explicit SturmChain(const CharPoly& p);

  // Number of distinct real roots in the half-open interval (a, b].
  long count_roots(const mpq_class& a, const mpq_class& b) const;
  long count_real_roots() const;

  // All real roots lie in (-root_bound, root_bound].
  const mpq_class& root_bound() const { return bound_; }

private:
  std::vector<std::vector<mpq_class>> chain_;  // starts at the square-free part
  mpq_class bound_;

  int sign_changes(const mpq_class& x) const;
};

struct RationalInterval {
  mpq_class lo, hi;  // lo <= value <= hi
  mpq_class width() const { return hi - lo; }
};

// Encloses the largest real root of p within max_width, shrunk further
// until no other distinct real root lies in (lo, hi]; an integer root is
// returned as the degenerate interval [k, k].  Requires at least one real
// root.
RationalInterval largest_root(const CharPoly& p, const mpq_class& max_width);

// largest_root of char_poly(g): encloses the largest eigenvalue (all real).
RationalInterval rho_exact(const Graph& g, const mpq_class& max_width);

enum class Trichotomy { Less, Equal, Greater };

// Ordering of rho(a) versus rho(b), decided exactly.  When the result is
// strict and gap is non-null, *gap receives a positive rational lower bound
// on |rho(a) - rho(b)|.
Trichotomy compare_rho_exact(const Graph& a, const Graph& b,
                             mpq_class* gap = nullptr);

// Ordering of rho(g) versus an exact rational value.
Trichotomy compare_rho_to(const Graph& g, const mpq_class& value);

}  // namespace spex
