// Floating-point spectral layer, per spex/spectral.hpp.
//
// Rigor of the enclosure: for a positive vector x and B = A+I, the true
// Collatz-Wielandt ratios min/max_i (Bx)_i/x_i bracket rho(B) = rho(A)+1.
// The computed ratios carry relative floating error below (deg+2) rounding
// steps per entry, so each ratio is widened multiplicatively before taking
// the min/max, and the final interval is padded outward by width/16; the
// iteration targets 7/8 of the requested width so the padded interval still
// meets it.

#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spex {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kMaxIterations = 1000000;

double to_double_down(const mpq_class& v) {
  const double d = v.get_d();  // truncates toward zero
  return v >= 0 ? d : std::nextafter(d, -std::numeric_limits<double>::infinity());
}

double to_double_up(const mpq_class& v) {
  const double d = v.get_d();
  return v <= 0 ? d : std::nextafter(d, std::numeric_limits<double>::infinity());
}

RhoResult exact_fallback(const Graph& g, double width) {
  if (!g.fast_tier()) {
    throw PrecisionError(
        "enclosure width unattainable in floating point and exact bisection "
        "is limited to order " +
        std::to_string(Graph::kFastCapacity));
  }
  const RationalInterval iv = rho_exact(g, mpq_class(1, 16) * mpq_class(width));
  RhoResult out;
  out.interval = {to_double_down(iv.lo), to_double_up(iv.hi),
                  RootInterval::Method::CharpolyBisection};

  // A few shifted power-iteration rounds give the Perron weights; the
  // enclosure itself no longer depends on them.
  const int n = g.order();
  std::vector<double> x(static_cast<std::size_t>(n), 1.0);
  std::vector<double> y(static_cast<std::size_t>(n));
  for (int round = 0; round < 2000; ++round) {
    double mx = 0;
    for (int v = 0; v < n; ++v) {
      double acc = x[static_cast<std::size_t>(v)];
      g.for_neighbors(v, [&](int w) { acc += x[static_cast<std::size_t>(w)]; });
      y[static_cast<std::size_t>(v)] = acc;
      mx = std::max(mx, acc);
    }
    for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] / mx;
  }
  out.perron.weights = std::move(x);
  return out;
}

// Connected case.
RhoResult rho_connected(const Graph& g, double width) {
  const int n = g.order();
  if (width < 16.0 * (n + 2) * std::max(1, n) * kEps) {
    return exact_fallback(g, width);  // below the Collatz-Wielandt floor
  }
  std::vector<double> x(static_cast<std::size_t>(n), 1.0);
  std::vector<double> y(static_cast<std::size_t>(n));

  const double target = width * 7 / 8;
  const double pad = width / 16;

  for (long iter = 0; iter < kMaxIterations; ++iter) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double ymax = 0;
    for (int v = 0; v < n; ++v) {
      double acc = x[static_cast<std::size_t>(v)];
      g.for_neighbors(v, [&](int w) { acc += x[static_cast<std::size_t>(w)]; });
      y[static_cast<std::size_t>(v)] = acc;
      ymax = std::max(ymax, acc);
      const double ratio = acc / x[static_cast<std::size_t>(v)];
      const double slack = 4.0 * (g.degree(v) + 2) * kEps * ratio;
      lo = std::min(lo, ratio - slack);
      hi = std::max(hi, ratio + slack);
    }
    if (hi - lo <= target) {
      RhoResult out;
      out.interval = {lo - 1 - pad, hi - 1 + pad,
                      RootInterval::Method::CollatzWielandt};
      out.perron.weights = x;
      return out;
    }
    for (int v = 0; v < n; ++v) {
      x[static_cast<std::size_t>(v)] = y[static_cast<std::size_t>(v)] / ymax;
    }
  }
  return exact_fallback(g, width);
}

}  // namespace

RhoResult rho_enclosure(const Graph& g, double width) {
  if (g.order() == 0) {
    throw DomainError("spectral radius of the empty graph is undefined");
  }
  if (!(width > 0)) throw DomainError("enclosure width must be positive");

  const auto comps = connected_components(g);
  if (comps.size() == 1) return rho_connected(g, width);

  RhoResult best;
  std::vector<double> weights(static_cast<std::size_t>(g.order()), 0.0);
  bool first = true;
  std::vector<int> best_comp;
  for (const auto& comp : comps) {
    RhoResult r = rho_connected(induced_subgraph(g, comp), width);
    if (first || r.interval.hi > best.interval.hi) {
      best = std::move(r);
      best_comp = comp;
      first = false;
    }
  }
  // Sound for the maximum: rho(g) = max over components, and each interval
  // contains its component's rho, so [max lo, max hi] would also work; using
  // the best component's interval alone stays correct because its hi is the
  // global max hi and rho(g) >= its lo.
  for (std::size_t i = 0; i < best_comp.size(); ++i) {
    weights[static_cast<std::size_t>(best_comp[i])] = best.perron.weights[i];
  }
  best.perron.weights = std::move(weights);
  best.disconnected = true;
  return best;
}

double tait_bound(long long n, int s, int t) {
  if (!(2 <= s && s <= t)) {
    throw DomainError("tait bound needs 2 <= s <= t");
  }
  if (n < s + t) throw DomainError("tait bound needs n >= s + t");
  const double base = s + t - 3;
  const double disc = base * base + 4.0 * (s - 1) * (n - s + 1.0) -
                      4.0 * (s - 2) * (t - 1);
  if (disc < 0) throw DomainError("tait bound discriminant is negative");
  return (base + std::sqrt(disc)) / 2;
}

double quotient_rho(const Graph& g, const std::vector<std::vector<int>>& classes) {
  const int n = g.order();
  std::vector<int> class_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (const int v : classes[i]) {
      if (v < 0 || v >= n) {
        throw DomainError("partition vertex " + std::to_string(v) +
                          " outside graph");
      }
      if (class_of[static_cast<std::size_t>(v)] != -1) {
        throw DomainError("partition vertex " + std::to_string(v) +
                          " listed twice");
      }
      class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v) {
    if (class_of[static_cast<std::size_t>(v)] == -1) {
      throw DomainError("partition misses vertex " + std::to_string(v));
    }
  }

  const int k = static_cast<int>(classes.size());
  std::vector<long> quotient(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    if (classes[static_cast<std::size_t>(i)].empty()) {
      throw DomainError("partition class " + std::to_string(i) + " is empty");
    }
    bool seeded = false;
    std::vector<long> counts(static_cast<std::size_t>(k));
    for (const int v : classes[static_cast<std::size_t>(i)]) {
      std::vector<long> mine(static_cast<std::size_t>(k), 0);
      g.for_neighbors(v, [&](int w) {
        ++mine[static_cast<std::size_t>(class_of[static_cast<std::size_t>(w)])];
      });
      if (!seeded) {
        counts = mine;
        seeded = true;
        continue;
      }
      for (int j = 0; j < k; ++j) {
        if (mine[static_cast<std::size_t>(j)] != counts[static_cast<std::size_t>(j)]) {
          throw ValidationError(
              "partition not equitable: vertex " + std::to_string(v) +
              " disagrees with its class about neighbors in class " +
              std::to_string(j));
        }
      }
    }
    for (int j = 0; j < k; ++j) {
      quotient[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
               static_cast<std::size_t>(j)] = counts[static_cast<std::size_t>(j)];
    }
  }

  const RationalInterval iv =
      largest_root(char_poly_matrix(quotient, k), mpq_class(1, 1000000000000L));
  mpq_class mid = (iv.lo + iv.hi) / 2;
  return mid.get_d();
}

double h1t_cubic_root(int t, int a0, int a1) {
  if (t < 4) throw DomainError("cubic root formula needs t >= 4");
  if (a0 < 0 || a1 < 0 || a0 + a1 != t - 1) {
    throw DomainError("cubic root formula needs a0 + a1 = t - 1");
  }
  if (a1 % 2 != 0) throw DomainError("cubic root formula needs a1 even");

  const double c2 = t - 3, c1 = 2.0 * t - 2, c0 = static_cast<double>(a0) * a1;
  const auto p = [&](double x) { return ((x - c2) * x - c1) * x + c0; };

  // Walk down from above the Cauchy bound to bracket the largest root, then
  // bisect to machine precision.
  double hi = 1 + std::max({std::abs(c2), c1, c0});
  double lo = hi;
  while (p(lo) > 0) {
    lo -= 0.25;
    if (lo < -hi) throw DomainError("cubic has no bracketable largest root");
  }
  hi = lo + 0.25;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2;
    if (mid == lo || mid == hi) break;
    (p(mid) >= 0 ? hi : lo) = mid;
  }
  return (lo + hi) / 2;
}

RhoComparison compare_rho(const Graph& a, const Graph& b) {
  double width = 1e-9;
  for (int round = 0; round < 3; ++round) {
    RhoResult ra, rb;
    try {
      ra = rho_enclosure(a, width);
      rb = rho_enclosure(b, width);
    } catch (const PrecisionError&) {
      break;
    }
    if (ra.interval.hi < rb.interval.lo) {
      return {Trichotomy::Less, rb.interval.lo - ra.interval.hi, false};
    }
    if (rb.interval.hi < ra.interval.lo) {
      return {Trichotomy::Greater, ra.interval.lo - rb.interval.hi, false};
    }
    width /= 64;
  }

  mpq_class gap = 0;
  const Trichotomy order = compare_rho_exact(a, b, &gap);
  return {order, to_double_down(gap), true};
}

}  // namespace spex
