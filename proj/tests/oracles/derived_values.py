#!/usr/bin/env python3
"""Independent reference computations for test constants.

Everything here is deliberately written from scratch (edge-set graphs,
numpy dense eigenvalues, Fraction bisection for polynomial roots) so the
values frozen into the C++ test suites do not share any code with the
library under test.  Run from the repository root:

    python3 tests/oracles/derived_values.py > tests/oracles/derived_values.out
"""

import itertools
import math
from fractions import Fraction

import numpy as np


# --------------------------------------------------------------------------
# exact largest real root of a monic integer cubic, by sign bisection with
# rational arithmetic (the cubics below all have three real roots)
# --------------------------------------------------------------------------

def cubic_largest_root(c2, c1, c0, bits=140):
    """Largest real root of x^3 + c2 x^2 + c1 x + c0 as a high-precision float."""
    p = lambda x: x * x * x + c2 * x * x + c1 * x + c0
    hi = Fraction(1 + max(abs(c2), abs(c1), abs(c0)))  # Cauchy bound
    lo = -hi
    # largest root: p is positive beyond it; walk lo up past the other roots
    # by scanning a fine grid for the last sign change.
    steps = 4096
    xs = [lo + (hi - lo) * k / steps for k in range(steps + 1)]
    last = None
    for a, b in zip(xs, xs[1:]):
        if p(a) <= 0 < p(b):
            last = (a, b)
    assert last is not None
    lo, hi = last
    for _ in range(bits):
        mid = (lo + hi) / 2
        if p(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return float((lo + hi) / 2), (lo + hi) / 2


# --------------------------------------------------------------------------
# tiny edge-set graph toolkit
# --------------------------------------------------------------------------

class EGraph:
    def __init__(self, n, edges=()):
        self.n = n
        self.edges = {frozenset(e) for e in edges}
        for e in self.edges:
            assert len(e) == 2 and all(0 <= v < n for v in e)

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def degrees(self):
        return sorted((self.degree(v) for v in range(self.n)), reverse=True)

    def adj_matrix(self):
        a = np.zeros((self.n, self.n))
        for e in self.edges:
            u, v = tuple(e)
            a[u][v] = a[v][u] = 1.0
        return a

    def rho(self):
        return float(np.max(np.linalg.eigvalsh(self.adj_matrix())))

    def complement(self):
        es = {frozenset((u, v)) for u in range(self.n) for v in range(u + 1, self.n)}
        return EGraph(self.n, es - self.edges)

    def neighbors(self, v):
        return {next(iter(e - {v})) for e in self.edges if v in e}


def disjoint_union(gs):
    n = 0
    edges = set()
    for g in gs:
        for e in g.edges:
            u, v = tuple(e)
            edges.add(frozenset((u + n, v + n)))
        n += g.n
    return EGraph(n, edges)


def join(g, h):
    u = disjoint_union([g, h])
    for a in range(g.n):
        for b in range(h.n):
            u.edges.add(frozenset((a, g.n + b)))
    return u


def complete(n):
    return EGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return EGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def subdivide_min_edge(g, k):
    """Subdivide one minimum-degree-sum edge k times (new path vertices appended)."""
    best = min(g.edges, key=lambda e: (sum(g.degree(v) for v in e), tuple(sorted(e))))
    u, v = sorted(best)
    edges = set(g.edges) - {best}
    n = g.n
    prev = u
    for i in range(k):
        edges.add(frozenset((prev, n + i)))
        prev = n + i
    edges.add(frozenset((prev, v)))
    return EGraph(n + k, edges)


def star_forest(s, t):
    """beta-1 copies of K_{1,s} plus one K_{1,alpha}; order t+1."""
    beta = (t + 1) // (s + 1)
    alpha = t - (beta - 1) * (s + 1)
    assert alpha >= s
    g = disjoint_union([star(alpha)] + [star(s)] * (beta - 1))
    assert g.n == t + 1
    return g


def petersen():
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))          # outer cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))                # spokes
    return EGraph(10, edges)


def habc(a, b, c):
    """Order a+b+c+3: w joined to A,B and u1; u1 joined to A,C; u2 joined to B,C."""
    w, u1, u2 = 0, 1, 2
    A = list(range(3, 3 + a))
    B = list(range(3 + a, 3 + a + b))
    C = list(range(3 + a + b, 3 + a + b + c))
    edges = [(w, u1)]
    edges += [(w, x) for x in A + B]
    edges += [(u1, x) for x in A + C]
    edges += [(u2, x) for x in B + C]
    return EGraph(a + b + c + 3, edges)


# --------------------------------------------------------------------------
# star-minor test: any connected S with |N(S)| >= t
# --------------------------------------------------------------------------

def max_boundary(g):
    """max |N(S)| over nonempty connected S (exhaustive over subsets)."""
    rows = [0] * g.n
    for e in g.edges:
        u, v = tuple(e)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    best = 0
    for mask in range(1, 1 << g.n):
        # connectivity by BFS inside mask
        lsb = mask & -mask
        reach = lsb
        while True:
            grow = reach
            m = reach
            while m:
                v = m & -m
                grow |= rows[v.bit_length() - 1] & mask
                m ^= v
            if grow == reach:
                break
            reach = grow
        if reach != mask:
            continue
        nb = 0
        m = mask
        while m:
            v = m & -m
            nb |= rows[v.bit_length() - 1]
            m ^= v
        best = max(best, bin(nb & ~mask).count("1"))
    return best


# --------------------------------------------------------------------------
# section 1: polynomial roots and closed forms
# --------------------------------------------------------------------------

print("== closed forms and cubic roots ==")
f4, exact4 = cubic_largest_root(-1, -6, 2)
print(f"largest root of x^3 - x^2 - 6x + 2      = {f4:.15f}")
f6, exact6 = cubic_largest_root(-3, -10, 4)
print(f"largest root of x^3 - 3x^2 - 10x + 4    = {f6:.15f}")
print(f"(1+sqrt(17))/2                          = {(1 + math.sqrt(17)) / 2:.15f}")
print(f"1+sqrt(13)                              = {1 + math.sqrt(13):.15f}")

km4 = complete(4)
km4.edges.discard(frozenset((0, 1)))
print(f"rho(K4 - e)  numpy                      = {km4.rho():.15f}")

h14c = star_forest(1, 4).complement()
print(f"rho(complement(H_1,4)) numpy            = {h14c.rho():.15f}  degrees {h14c.degrees()}")
h16c = star_forest(1, 6).complement()
print(f"rho(complement(H_1,6)) numpy            = {h16c.rho():.15f}  degrees {h16c.degrees()}")

k1_4k3 = join(complete(1), disjoint_union([complete(3)] * 4))
print(f"rho(K1 join 4K3) numpy                  = {k1_4k3.rho():.15f}  (n={k1_4k3.n}, e={len(k1_4k3.edges)})")


def tait_bound(n, s, t):
    d = (s + t - 3) ** 2 + 4 * (s - 1) * (n - s + 1) - 4 * (s - 2) * (t - 1)
    return 0.5 * (s + t - 3 + math.sqrt(d))


print(f"tait_bound(13,2,3)                      = {tait_bound(13, 2, 3):.15f}")
print(f"tait_bound(22,5,8)                      = {tait_bound(22, 5, 8):.15f}")
print(f"tait_bound(10,2,3)                      = {tait_bound(10, 2, 3):.15f}")

# --------------------------------------------------------------------------
# section 2: named-family invariants
# --------------------------------------------------------------------------

print()
print("== family invariants ==")
p = petersen()
pc = p.complement()
print(f"petersen: n={p.n} e={len(p.edges)} degrees={p.degrees()}")
print(f"petersen complement: n={pc.n} e={len(pc.edges)} degrees={pc.degrees()}")
print(f"petersen max connected-set boundary     = {max_boundary(p)}  (star(6) minor: {max_boundary(p) >= 6})")

h25c = star_forest(2, 5).complement()
print(f"complement(H_2,5): e={len(h25c.edges)} degrees={h25c.degrees()}")
s1h25c = subdivide_min_edge(h25c, 1)
print(f"S1(complement(H_2,5)): n={s1h25c.n} e={len(s1h25c.edges)} degrees={s1h25c.degrees()}")
h022 = habc(0, 2, 2)
print(f"H_0,2,2: n={h022.n} e={len(h022.edges)} degrees={h022.degrees()}")
print(f"complement(H_0,2,2): degrees={h022.complement().degrees()} e={len(h022.complement().edges)}")
s2k4 = subdivide_min_edge(complete(4), 2)
print(f"S2(K4): n={s2k4.n} e={len(s2k4.edges)} degrees={s2k4.degrees()}")

# --------------------------------------------------------------------------
# section 3: theorem-1.3 candidate showdowns
# --------------------------------------------------------------------------

print()
print("== candidate showdowns ==")


def showdown(n, s, t):
    beta = (t + 1) // (s + 1)
    rem = n - s + 1
    q = rem % t
    if q == 0:
        q = t
    pp = (rem - q) // t
    menu = {}
    clique = complete(s - 1)
    menu["plain"] = join(clique, disjoint_union([complete(t)] * pp + [complete(q)]))
    if t == 8 and q == 2 and pp >= 1:
        menu["petersen-complement"] = join(
            clique, disjoint_union([complete(t)] * (pp - 1) + [petersen().complement()]))
    if q == 2 and beta >= 2 and pp >= 1:
        menu["subdivided-complement"] = join(
            clique, disjoint_union([complete(t)] * (pp - 1)
                                   + [subdivide_min_edge(star_forest(s, t).complement(), 1)]))
    if beta >= 2 and pp >= q:
        menu["q-complements"] = join(
            clique, disjoint_union([complete(t)] * (pp - q)
                                   + [star_forest(s, t).complement()] * q))
    if q == 2 and t == 8 and beta == 1:
        designated = "petersen-complement"
    elif q == 2 and beta == 2:
        designated = "subdivided-complement"
    elif q <= 2 * (beta - 1) and not (q == 2 and beta == 2):
        designated = "q-complements"
    else:
        designated = "plain"
    print(f"(n,s,t)=({n},{s},{t})  beta={beta} p={pp} q={q}  designated={designated}")
    ranked = sorted(((g.rho(), name) for name, g in menu.items()), reverse=True)
    for i, (r, name) in enumerate(ranked):
        gap = "" if i == 0 else f"   gap-to-first={ranked[0][0] - r:.9f}"
        print(f"    {i + 1}. {name:24s} rho={r:.12f}{gap}")
    print(f"    designated ranks first: {ranked[0][1] == designated}")
    # adjacent gaps must be resolvable at 1e-6 for the certification machinery
    for (r1, _), (r2, _) in zip(ranked, ranked[1:]):
        assert r1 - r2 >= 1e-6


# the four pinned acceptance instances ...
showdown(22, 5, 8)
showdown(18, 2, 5)
showdown(19, 2, 4)
showdown(35, 2, 8)
# ... and the smallest instances at or past the asymptotic crossover, where the
# designated construction genuinely overtakes the plain join (frozen for tests)
showdown(23, 2, 5)
showdown(59, 2, 8)
showdown(174, 5, 8)

# --------------------------------------------------------------------------
# section 4: order-(t+1) property graphs, exhaustive over labeled graphs
# --------------------------------------------------------------------------

print()
print("== order-(t+1) property scan ==")


def property_scan(s, t):
    """Exhaustive scan of all labeled connected graphs of order t+1.

    At order exactly t+1 every branch set of a (t+1)-vertex biclique minor is
    a singleton, so K_{a,b} containment degenerates to spanning-subgraph
    containment, which we test directly.  Cross-checks the complement
    component criterion and reports the maximum edge count.
    """
    n = t + 1
    gamma = min(s, (t + 1) // 2)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    full = (1 << n) - 1
    max_edges = -1
    mismatches = 0
    checked = 0
    for code in range(1 << len(pairs)):
        rows = [0] * n
        ecount = 0
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                ecount += 1
        # connected?
        reach = 1
        while True:
            grow = reach
            m = reach
            while m:
                v = m & -m
                grow |= rows[v.bit_length() - 1]
                m ^= v
            if grow == reach:
                break
            reach = grow
        if reach != full:
            continue
        checked += 1
        # spanning K_{a,b} for a+b=n, a<=gamma: choose the a-side
        has = False
        for a in range(1, gamma + 1):
            for side in itertools.combinations(range(n), a):
                smask = 0
                for v in side:
                    smask |= 1 << v
                ok = True
                for v in range(n):
                    if smask >> v & 1:
                        continue
                    if (rows[v] & smask) != smask:
                        ok = False
                        break
                if ok:
                    has = True
                    break
            if has:
                break
        prop = not has
        # complement component criterion: every component of complement >= gamma+1
        crows = [(~rows[v]) & full & ~(1 << v) for v in range(n)]
        seen = 0
        crit = True
        for v in range(n):
            if seen >> v & 1:
                continue
            reach = 1 << v
            while True:
                grow = reach
                m = reach
                while m:
                    w = m & -m
                    grow |= crows[w.bit_length() - 1]
                    m ^= w
                if grow == reach:
                    break
                reach = grow
            seen |= reach
            if bin(reach).count("1") < gamma + 1:
                crit = False
        if prop != crit:
            mismatches += 1
        if prop:
            max_edges = max(max_edges, ecount)
    beta = (t + 1) // (s + 1)
    print(f"(s,t)=({s},{t}): connected labeled graphs={checked}, "
          f"criterion mismatches={mismatches}, max property edges={max_edges} "
          f"(C(t,2)+beta-1={t * (t - 1) // 2 + beta - 1})")


property_scan(2, 5)
property_scan(2, 6)

# --------------------------------------------------------------------------
# section 5: small exhaustive star-minor extremal checks
# --------------------------------------------------------------------------

print()
print("== connected star-minor-free argmax, labeled exhaustive ==")


def starfree_argmax(t, n):
    """Scan all labeled connected n-vertex graphs without a K_{1,t} minor,
    report the maximum spectral radius, its degree sequences, and runner-up."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    full = (1 << n) - 1
    best = (-1.0, None)
    second = -1.0
    seqs = set()
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        reach = 1
        while True:
            grow = reach
            m = reach
            while m:
                v = m & -m
                grow |= rows[v.bit_length() - 1]
                m ^= v
            if grow == reach:
                break
            reach = grow
        if reach != full:
            continue
        # star-minor check: max boundary of connected subsets
        found = False
        for mask in range(1, 1 << n):
            lsb = mask & -mask
            reach2 = lsb
            while True:
                grow = reach2
                m = reach2
                while m:
                    v = m & -m
                    grow |= rows[v.bit_length() - 1] & mask
                    m ^= v
                if grow == reach2:
                    break
                reach2 = grow
            if reach2 != mask:
                continue
            nb = 0
            m = mask
            while m:
                v = m & -m
                nb |= rows[v.bit_length() - 1]
                m ^= v
            if bin(nb & ~mask).count("1") >= t:
                found = True
                break
        if found:
            continue
        a = np.zeros((n, n))
        for v in range(n):
            m = rows[v]
            while m:
                w = m & -m
                a[v][w.bit_length() - 1] = 1.0
                m ^= w
        r = float(np.max(np.linalg.eigvalsh(a)))
        degs = tuple(sorted((bin(rows[v]).count("1") for v in range(n)), reverse=True))
        if r > best[0] + 1e-9:
            second = best[0]
            best = (r, degs)
            seqs = {degs}
        elif abs(r - best[0]) <= 1e-9:
            seqs.add(degs)
        elif r > second:
            second = r
    print(f"t={t} n={n}: max rho={best[0]:.12f} degree sequences={sorted(seqs)} "
          f"runner-up rho={second:.12f} gap={best[0] - second:.9f}")


starfree_argmax(3, 5)
starfree_argmax(3, 6)
starfree_argmax(4, 5)
starfree_argmax(4, 6)

print()
print("== counterexample scan: rho = t-1 attainment for t=3 ==")
for cyc in (5, 6, 7, 8):
    g = EGraph(cyc, [(i, (i + 1) % cyc) for i in range(cyc)])
    print(f"C_{cyc}: max boundary={max_boundary(g)} (star(3)-minor free: {max_boundary(g) < 3}), "
          f"rho={g.rho():.12f}")
