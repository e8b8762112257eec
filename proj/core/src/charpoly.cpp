// Exact spectral machinery: Faddeev-LeVerrier characteristic polynomials,
// Sturm chains on the square-free part (with zero-skipping sign counts, so
// count(a, b] = V(a) - V(b) holds even when an endpoint is a root), largest
// root isolation by bisection, and exact trichotomy comparisons using a
// polynomial gcd to certify equality.

#include "spex/charpoly.hpp"

#include <algorithm>
#include <utility>

namespace spex {
namespace {

using QPoly = std::vector<mpq_class>;  // ascending coefficients, no zero tail

void normalize(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

mpq_class poly_eval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

QPoly poly_derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) {
    d.push_back(p[i] * static_cast<long>(i));
  }
  normalize(d);
  return d;
}

QPoly poly_rem(QPoly a, const QPoly& b) {
  while (poly_degree(a) >= poly_degree(b)) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();  // the leading term cancels exactly
    normalize(a);
    if (a.empty()) break;
  }
  return a;
}

QPoly poly_divide_exact(QPoly a, const QPoly& b) {
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (poly_degree(a) >= poly_degree(b)) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    normalize(a);
    if (a.empty()) break;
  }
  if (!a.empty()) {
    throw ValidationError("polynomial division expected to be exact");
  }
  normalize(q);
  return q;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    QPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (mpq_class& c : a) c /= lead;  // monic
  }
  return a;
}

QPoly to_qpoly(const CharPoly& p) {
  QPoly q;
  for (const mpz_class& c : p.coeffs) q.emplace_back(c);
  normalize(q);
  return q;
}

// Cauchy bound for a monic polynomial: all roots lie in (-B, B].
mpq_class cauchy_bound(const QPoly& monic) {
  mpq_class mx = 0;
  for (std::size_t i = 0; i + 1 < monic.size(); ++i) {
    mpq_class a = abs(monic[i] / monic.back());
    if (a > mx) mx = a;
  }
  return mx + 1;
}

std::vector<QPoly> build_chain(QPoly p) {
  normalize(p);
  if (p.empty()) throw DomainError("Sturm chain of the zero polynomial");
  const mpq_class lead = p.back();
  for (mpq_class& c : p) c /= lead;

  if (poly_degree(p) >= 1) {
    const QPoly g = poly_gcd(p, poly_derivative(p));
    if (poly_degree(g) >= 1) p = poly_divide_exact(p, g);
  }

  std::vector<QPoly> chain{p};
  if (poly_degree(p) >= 1) chain.push_back(poly_derivative(p));
  while (poly_degree(chain.back()) >= 1) {
    QPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (mpq_class& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int chain_sign_changes(const std::vector<QPoly>& chain, const mpq_class& x) {
  int changes = 0, last = 0;
  for (const QPoly& p : chain) {
    const int s = sgn(poly_eval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long chain_count(const std::vector<QPoly>& chain, const mpq_class& a,
                 const mpq_class& b) {
  if (a > b) throw DomainError("root counting interval has a > b");
  return chain_sign_changes(chain, a) - chain_sign_changes(chain, b);
}

// Bisection state tracking the largest real root: the root stays in
// (lo, hi] and no root lies above hi.
struct LargestRoot {
  const std::vector<QPoly>* chain;
  mpq_class bound, lo, hi;

  explicit LargestRoot(const std::vector<QPoly>& c, const mpq_class& b)
      : chain(&c), bound(b), lo(-b), hi(b) {
    if (chain_count(*chain, lo, hi) < 1) {
      throw DomainError("polynomial has no real roots");
    }
  }

  void step() {
    mpq_class mid = (lo + hi) / 2;
    mid.canonicalize();
    if (chain_count(*chain, mid, bound) >= 1) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }

  bool isolated() const { return chain_count(*chain, lo, hi) == 1; }
};

}  // namespace

mpq_class CharPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

CharPoly char_poly(const Graph& g) {
  if (!g.fast_tier()) {
    throw CapacityError("characteristic polynomials are limited to order " +
                        std::to_string(Graph::kFastCapacity));
  }
  const int n = g.order();
  CharPoly p;
  p.coeffs.assign(static_cast<std::size_t>(n) + 1, mpz_class(0));
  p.coeffs[static_cast<std::size_t>(n)] = 1;
  if (n == 0) return p;

  const auto at = [n](std::vector<mpz_class>& m, int i, int j) -> mpz_class& {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(j)];
  };

  // N starts as the identity; each round sets M = A*N, extracts the next
  // coefficient from tr(M)/k, and folds it back into N = M + c*I.
  std::vector<mpz_class> N(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                           mpz_class(0));
  for (int i = 0; i < n; ++i) at(N, i, i) = 1;
  std::vector<mpz_class> M(N.size());

  for (int k = 1; k <= n; ++k) {
    for (mpz_class& x : M) x = 0;
    for (int i = 0; i < n; ++i) {
      g.for_neighbors(i, [&](int w) {
        for (int j = 0; j < n; ++j) at(M, i, j) += at(N, w, j);
      });
    }
    mpz_class tr = 0;
    for (int i = 0; i < n; ++i) tr += at(M, i, i);
    if (tr % k != 0) {
      throw ValidationError("characteristic polynomial trace not divisible");
    }
    const mpz_class c = -tr / k;
    p.coeffs[static_cast<std::size_t>(n - k)] = c;
    N = M;
    for (int i = 0; i < n; ++i) at(N, i, i) += c;
  }

  if (p.coeffs[static_cast<std::size_t>(n) - 1] != 0) {
    throw ValidationError("adjacency polynomial has a nonzero trace term");
  }
  for (const mpz_class& x : N) {
    if (x != 0) {
      throw ValidationError("Cayley-Hamilton residual is nonzero");
    }
  }
  return p;
}

CharPoly char_poly_matrix(const std::vector<long>& rowmajor, int k) {
  if (k < 0 || rowmajor.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(k)) {
    throw DomainError("matrix entries must form a k x k row-major array");
  }
  CharPoly p;
  p.coeffs.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
  p.coeffs[static_cast<std::size_t>(k)] = 1;
  if (k == 0) return p;

  const auto at = [k](std::vector<mpz_class>& m, int i, int j) -> mpz_class& {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
             static_cast<std::size_t>(j)];
  };
  const auto a = [&](int i, int j) -> long {
    return rowmajor[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
                    static_cast<std::size_t>(j)];
  };

  std::vector<mpz_class> N(rowmajor.size(), mpz_class(0));
  for (int i = 0; i < k; ++i) at(N, i, i) = 1;
  std::vector<mpz_class> M(N.size());

  for (int step = 1; step <= k; ++step) {
    for (mpz_class& x : M) x = 0;
    for (int i = 0; i < k; ++i) {
      for (int l = 0; l < k; ++l) {
        if (a(i, l) == 0) continue;
        for (int j = 0; j < k; ++j) at(M, i, j) += a(i, l) * at(N, l, j);
      }
    }
    mpz_class tr = 0;
    for (int i = 0; i < k; ++i) tr += at(M, i, i);
    if (tr % step != 0) {
      throw ValidationError("characteristic polynomial trace not divisible");
    }
    const mpz_class c = -tr / step;
    p.coeffs[static_cast<std::size_t>(k - step)] = c;
    N = M;
    for (int i = 0; i < k; ++i) at(N, i, i) += c;
  }
  for (const mpz_class& x : N) {
    if (x != 0) {
      throw ValidationError("Cayley-Hamilton residual is nonzero");
    }
  }
  return p;
}

SturmChain::SturmChain(const CharPoly& p) : chain_(build_chain(to_qpoly(p))) {
  bound_ = cauchy_bound(to_qpoly(p));
}

int SturmChain::sign_changes(const mpq_class& x) const {
  return chain_sign_changes(chain_, x);
}

long SturmChain::count_roots(const mpq_class& a, const mpq_class& b) const {
  return chain_count(chain_, a, b);
}

long SturmChain::count_real_roots() const { return count_roots(-bound_, bound_); }

RationalInterval largest_root(const CharPoly& p, const mpq_class& max_width) {
  if (p.degree() < 1) {
    throw DomainError("largest root needs a polynomial of degree >= 1");
  }
  if (max_width <= 0) throw DomainError("enclosure width must be positive");

  const QPoly q = to_qpoly(p);
  const std::vector<QPoly> chain = build_chain(q);
  const mpq_class bound = cauchy_bound(q);

  LargestRoot root(chain, bound);
  while (root.hi - root.lo > max_width || !root.isolated()) root.step();

  // An integer in (lo, hi] that is a root with nothing above it is the
  // exact answer (monic integer polynomials have no other rational roots).
  mpz_class k;
  mpz_cdiv_q(k.get_mpz_t(), root.lo.get_num_mpz_t(), root.lo.get_den_mpz_t());
  for (mpq_class cand(k); cand <= root.hi; cand += 1) {
    if (cand > root.lo && p(cand) == 0 &&
        chain_count(chain, cand, bound) == 0) {
      return RationalInterval{cand, cand};
    }
  }
  return RationalInterval{root.lo, root.hi};
}

RationalInterval rho_exact(const Graph& g, const mpq_class& max_width) {
  if (g.order() == 0) {
    throw DomainError("spectral radius of the empty graph is undefined");
  }
  return largest_root(char_poly(g), max_width);
}

Trichotomy compare_rho_exact(const Graph& a, const Graph& b, mpq_class* gap) {
  if (a.order() == 0 || b.order() == 0) {
    throw DomainError("spectral radius of the empty graph is undefined");
  }
  const QPoly qa = to_qpoly(char_poly(a));
  const QPoly qb = to_qpoly(char_poly(b));
  const std::vector<QPoly> ca = build_chain(qa);
  const std::vector<QPoly> cb = build_chain(qb);
  LargestRoot ra(ca, cauchy_bound(qa));
  LargestRoot rb(cb, cauchy_bound(qb));

  bool equality_checked = false;
  for (;;) {
    if (ra.hi < rb.lo) {
      if (gap != nullptr) *gap = rb.lo - ra.hi;
      return Trichotomy::Less;
    }
    if (rb.hi < ra.lo) {
      if (gap != nullptr) *gap = ra.lo - rb.hi;
      return Trichotomy::Greater;
    }
    if (!equality_checked && ra.isolated() && rb.isolated()) {
      equality_checked = true;
      // Shared value <=> gcd has a root in the overlap of the isolating
      // intervals (each interval contains exactly one root of its own
      // polynomial, so a common root there is both largest roots at once).
      const QPoly h = poly_gcd(qa, qb);
      if (poly_degree(h) >= 1) {
        const std::vector<QPoly> ch = build_chain(h);
        const mpq_class lo = std::max(ra.lo, rb.lo);
        const mpq_class hi = std::min(ra.hi, rb.hi);
        if (lo <= hi && chain_count(ch, lo, hi) >= 1) return Trichotomy::Equal;
      }
    }
    ra.step();
    rb.step();
  }
}

Trichotomy compare_rho_to(const Graph& g, const mpq_class& value) {
  if (g.order() == 0) {
    throw DomainError("spectral radius of the empty graph is undefined");
  }
  const CharPoly p = char_poly(g);
  const QPoly q = to_qpoly(p);
  const std::vector<QPoly> chain = build_chain(q);
  const mpq_class bound = cauchy_bound(q);
  if (value < bound && chain_count(chain, value, bound) >= 1) {
    return Trichotomy::Greater;
  }
  if (p(value) == 0) return Trichotomy::Equal;
  return Trichotomy::Less;
}

}  // namespace spex
