// Exhaustive spectral-extremal searches, candidate showdowns between the
// named join constructions, and the statement verifiers.
//
// search_extremal streams the isomorphism classes of the requested order,
// filters them through the constraint, and keeps a rigorous enclosure per
// feasible class.  The winner is then decided exactly: every class whose
// enclosure still overlaps the best lower bound is compared with the
// champion through compare_rho (which escalates to integer characteristic
// polynomials when enclosures cannot separate), so reported ties are true
// equalities and the reported gap is a sound lower bound.

#include "spex/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "spex/canonical.hpp"
#include "spex/charpoly.hpp"
#include "spex/enumerate.hpp"
#include "spex/graph6.hpp"

namespace spex {
namespace {

constexpr double kWidth = 1e-9;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Conservative double lower bound for a positive rational.
double rational_down(const mpq_class& v) {
  return std::nextafter(v.get_d(), -std::numeric_limits<double>::infinity());
}

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string interval_text(const RootInterval& r) {
  return "[" + fixed12(r.lo) + ", " + fixed12(r.hi) + "]";
}

const char* pruning_name(PruningMode mode) {
  switch (mode) {
    case PruningMode::None: return "none";
    case PruningMode::EdgeBound: return "edge-bound";
    case PruningMode::MajorizationHeuristic: return "majorization-heuristic";
  }
  return "?";
}

long long binom2(long long t) { return t * (t - 1) / 2; }

}  // namespace

// ---- constraints -----------------------------------------------------------

SearchConstraint SearchConstraint::kst_minor_free(int s, int t) {
  require(s >= 1 && t >= s, "biclique-minor-freeness needs 1 <= s <= t");
  SearchConstraint c;
  c.kind = ConstraintKind::KstMinorFree;
  c.s = s;
  c.t = t;
  return c;
}

SearchConstraint SearchConstraint::k1t_minor_free(int t) {
  require(t >= 1, "star-minor-freeness needs t >= 1");
  SearchConstraint c;
  c.kind = ConstraintKind::K1tMinorFree;
  c.t = t;
  return c;
}

SearchConstraint SearchConstraint::st_property(int s, int t) {
  require(s >= 1 && t >= s, "the freeness property needs 1 <= s <= t");
  SearchConstraint c;
  c.kind = ConstraintKind::StProperty;
  c.s = s;
  c.t = t;
  return c;
}

SearchConstraint SearchConstraint::pattern_free(MinorPattern pattern) {
  SearchConstraint c;
  c.kind = ConstraintKind::PatternFree;
  c.pattern = std::move(pattern);
  return c;
}

bool SearchConstraint::satisfied_by(const Graph& g) const {
  switch (kind) {
    case ConstraintKind::KstMinorFree:
      return !has_minor(g, MinorPattern::biclique(std::min(s, t), std::max(s, t)));
    case ConstraintKind::K1tMinorFree:
      return !has_minor(g, MinorPattern::star_pattern(t));
    case ConstraintKind::StProperty:
      return has_st_property(g, s, t);
    case ConstraintKind::PatternFree:
      return !has_minor(g, *pattern);
  }
  return false;
}

std::string SearchConstraint::to_string() const {
  switch (kind) {
    case ConstraintKind::KstMinorFree:
      return "kst-minor-free:s=" + std::to_string(s) + ",t=" + std::to_string(t);
    case ConstraintKind::K1tMinorFree:
      return "k1t-minor-free:t=" + std::to_string(t);
    case ConstraintKind::StProperty:
      return "st-property:s=" + std::to_string(s) + ",t=" + std::to_string(t);
    case ConstraintKind::PatternFree:
      return "pattern-free:" + pattern->to_string();
  }
  return "?";
}

std::string SearchSpec::to_string() const {
  std::ostringstream out;
  out << "n=" << n << ";scope=" << (connected_only ? "connected" : "all")
      << ";constraint=" << constraint.to_string()
      << ";pruning=" << pruning_name(pruning);
  return out.str();
}

// ---- extremal search -------------------------------------------------------

namespace {

// Edge caps proven for connected hosts: C(t,2)+n-t for star-minor-free
// graphs from order t+2 on, and C(t,2)+beta-1 for property graphs at order
// exactly t+1.  Every feasible graph obeys the applicable cap, so skipping
// heavier graphs cannot change the search result.
std::optional<long long> proven_edge_cap(const SearchSpec& spec) {
  if (!spec.connected_only) return std::nullopt;
  const SearchConstraint& c = spec.constraint;
  int t = -1;
  if (c.kind == ConstraintKind::K1tMinorFree) {
    t = c.t;
  } else if (c.kind == ConstraintKind::StProperty) {
    t = c.t;
  } else if (c.kind == ConstraintKind::KstMinorFree && c.s == 1) {
    t = c.t;
  } else if (c.kind == ConstraintKind::PatternFree && c.pattern &&
             c.pattern->kind == MinorPattern::Kind::Star) {
    t = c.pattern->b;
  }
  if (t < 1) return std::nullopt;
  if (spec.n >= t + 2) return binom2(t) + spec.n - t;
  if (spec.n == t + 1 && c.kind == ConstraintKind::StProperty) {
    const int beta = (t + 1) / (c.s + 1);
    return binom2(t) + beta - 1;
  }
  return std::nullopt;
}

struct FeasibleEntry {
  std::string g6;
  RootInterval rho;
};

nlohmann::json interval_json(const RootInterval& r) {
  return {{"lo", r.lo},
          {"hi", r.hi},
          {"method", r.method == RootInterval::Method::CollatzWielandt
                         ? "collatz-wielandt"
                         : "charpoly-bisection"}};
}

}  // namespace

std::string SearchCertificate::to_json() const {
  nlohmann::json j;
  j["schema"] = schema;
  j["spec"] = {{"n", spec.n},
               {"scope", spec.connected_only ? "connected" : "all"},
               {"constraint", spec.constraint.to_string()},
               {"pruning", pruning_name(spec.pruning)}};
  j["classes_examined"] = classes_examined;
  j["feasible_count"] = feasible_count;
  j["winner"] = winner ? nlohmann::json(*winner) : nlohmann::json(nullptr);
  j["winner_rho"] = winner_rho ? interval_json(*winner_rho) : nlohmann::json(nullptr);
  j["co_winners"] = co_winners;
  j["runner_up"] = runner_up ? nlohmann::json(*runner_up) : nlohmann::json(nullptr);
  j["runner_up_rho"] =
      runner_up_rho ? interval_json(*runner_up_rho) : nlohmann::json(nullptr);
  j["gap_lower_bound"] =
      gap_lower_bound ? nlohmann::json(*gap_lower_bound) : nlohmann::json(nullptr);
  j["gap_exact"] = gap_exact;
  j["config_hash"] = config_hash;
  return j.dump(2) + "\n";
}

SearchCertificate search_extremal(const SearchSpec& spec) {
  SearchCertificate cert;
  cert.spec = spec;
  cert.config_hash = fnv1a_hex(spec.to_string() + ";schema=1");

  const std::optional<long long> cap =
      spec.pruning == PruningMode::EdgeBound ? proven_edge_cap(spec) : std::nullopt;
  const bool heuristic = spec.pruning == PruningMode::MajorizationHeuristic;

  std::vector<FeasibleEntry> feas;
  DegreeSequence best_degrees;  // heuristic state: degrees of the best-so-far
  double best_lo = -std::numeric_limits<double>::infinity();

  enumerate_graphs(spec.n, spec.connected_only, [&](const Graph& g) {
    ++cert.classes_examined;
    if (cap && g.size() > *cap) return;
    if (heuristic && !feas.empty()) {
      const DegreeSequence degrees = degree_sequence(g);
      if (degrees != best_degrees && weak_majorizes(degrees, best_degrees)) return;
    }
    if (!spec.constraint.satisfied_by(g)) return;
    const RhoResult rho = rho_enclosure(g, kWidth);
    if (heuristic && rho.interval.lo > best_lo) {
      best_lo = rho.interval.lo;
      best_degrees = degree_sequence(g);
    }
    feas.push_back({graph6_encode(g), rho.interval});
  });
  cert.feasible_count = static_cast<long long>(feas.size());
  if (feas.empty()) return cert;

  double max_lo = -std::numeric_limits<double>::infinity();
  for (const FeasibleEntry& f : feas) max_lo = std::max(max_lo, f.rho.lo);

  // Decide the champion exactly among enclosure-overlapping candidates.
  std::size_t win = feas.size();
  Graph win_graph;
  std::vector<std::size_t> tied;
  for (std::size_t i = 0; i < feas.size(); ++i) {
    if (feas[i].rho.hi < max_lo) continue;  // strictly below some candidate
    Graph g = graph6_decode(feas[i].g6);
    if (win == feas.size()) {
      win = i;
      win_graph = std::move(g);
      continue;
    }
    switch (compare_rho(g, win_graph).order) {
      case Trichotomy::Greater:
        win = i;
        win_graph = std::move(g);
        tied.clear();
        break;
      case Trichotomy::Equal:
        tied.push_back(i);
        break;
      case Trichotomy::Less:
        break;
    }
  }
  cert.winner = feas[win].g6;
  cert.winner_rho = feas[win].rho;
  for (const std::size_t i : tied) cert.co_winners.push_back(feas[i].g6);

  // Runner-up: the best feasible class strictly below the winner's value.
  bool have_runner = false;
  double best_gap = std::numeric_limits<double>::infinity();
  std::size_t runner = 0;
  bool runner_exact = false;
  for (std::size_t i = 0; i < feas.size(); ++i) {
    if (i == win) continue;
    if (std::find(tied.begin(), tied.end(), i) != tied.end()) continue;
    double gap;
    bool exact = false;
    if (feas[i].rho.hi < max_lo) {
      // rho(winner) >= max_lo, so the interval difference already certifies.
      gap = max_lo - feas[i].rho.hi;
    } else {
      mpq_class exact_gap;
      const Trichotomy order =
          compare_rho_exact(win_graph, graph6_decode(feas[i].g6), &exact_gap);
      if (order != Trichotomy::Greater) {
        throw ValidationError(
            "search invariant violated: champion not strictly above a "
            "non-tied candidate");
      }
      gap = rational_down(exact_gap);
      exact = true;
    }
    if (!have_runner || gap < best_gap) {
      have_runner = true;
      best_gap = gap;
      runner = i;
      runner_exact = exact;
    }
  }
  if (have_runner) {
    cert.runner_up = feas[runner].g6;
    cert.runner_up_rho = feas[runner].rho;
    cert.gap_lower_bound = best_gap;
    cert.gap_exact = runner_exact;
  }
  return cert;
}

// ---- candidate showdown ----------------------------------------------------

ShowdownResult candidate_showdown(int n, int s, int t) {
  require(s >= 2 && t >= s, "showdown needs 2 <= s <= t");
  require(n >= s + t, "showdown needs n >= s + t");
  const auto [p, q] = tait_shape(n, s, t);
  const int beta = (t + 1) / (s + 1);

  const std::string head = "K_" + std::to_string(s - 1) + " v (";
  const auto blocks = [&](int k) {
    return std::to_string(k) + "K_" + std::to_string(t) + " u ";
  };
  const std::string sf_name =
      "complement(H_{" + std::to_string(s) + "," + std::to_string(t) + "})";

  struct Item {
    std::string label, desc;
    Graph tail;
    CandidateCase which;
  };
  std::vector<Item> items;
  items.push_back({"tait", head + blocks(p) + "K_" + std::to_string(q) + ")",
                   clique_blocks(t, p, {complete_graph(q)}),
                   CandidateCase::PlainTait});
  // Each replacement enters the menu exactly under its own case hypotheses;
  // outside them the construction can lose minor-freeness (e.g. the
  // once-subdivided complement gains a star minor whenever beta >= 3), so
  // the join check below is a re-verification, not a filter.
  if (q == 2 && t == 8 && beta == 1 && p >= 1) {
    items.push_back({"petersen-complement-tail",
                     head + blocks(p - 1) + "complement(Petersen))",
                     clique_blocks(t, p - 1, {petersen_complement()}),
                     CandidateCase::PetersenComplementTail});
  }
  if (q == 2 && beta == 2 && p >= 1) {
    items.push_back({"subdivided-complement-tail",
                     head + blocks(p - 1) + "S^1(" + sf_name + "))",
                     clique_blocks(t, p - 1, {subdivided_complement(s, t)}),
                     CandidateCase::SubdividedComplementTail});
  }
  if (beta >= 2 && q <= 2 * (beta - 1) && p >= q) {
    items.push_back(
        {"star-forest-complement-tails",
         head + blocks(p - q) + std::to_string(q) + " " + sf_name + ")",
         clique_blocks(t, p - q,
                       std::vector<Graph>(static_cast<std::size_t>(q),
                                          star_forest_complement(s, t))),
         CandidateCase::StarForestComplementTails});
  }

  const CandidateCase designated = extremal_candidate_case(n, s, t);
  const Graph head_clique = complete_graph(s - 1);
  std::vector<ShowdownEntry> pool;
  bool designated_found = false;
  for (Item& item : items) {
    if (!dominated_join_check(item.tail, s, t)) {
      throw ValidationError("candidate tail is not minor-free: " + item.label);
    }
    ShowdownEntry entry;
    entry.label = std::move(item.label);
    entry.description = std::move(item.desc);
    entry.graph = join(head_clique, item.tail);
    entry.rho = rho_enclosure(entry.graph, kWidth).interval;
    entry.designated = (item.which == designated);
    designated_found = designated_found || entry.designated;
    pool.push_back(std::move(entry));
  }
  if (!designated_found) {
    throw ValidationError("designated candidate missing from the menu");
  }

  ShowdownResult result;
  result.n = n;
  result.s = s;
  result.t = t;
  while (!pool.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (compare_rho(pool[i].graph, pool[best].graph).order ==
          Trichotomy::Greater) {
        best = i;
      }
    }
    result.ranked.push_back(std::move(pool[best]));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));
  }
  for (std::size_t i = 0; i + 1 < result.ranked.size(); ++i) {
    const RhoComparison cmp =
        compare_rho(result.ranked[i].graph, result.ranked[i + 1].graph);
    if (cmp.order == Trichotomy::Less) {
      throw ValidationError("showdown ranking is not monotone");
    }
    result.adjacent_gaps.push_back(
        cmp.order == Trichotomy::Greater ? cmp.gap_lower_bound : 0.0);
  }
  for (std::size_t i = 0; i < result.ranked.size(); ++i) {
    if (result.ranked[i].designated) {
      result.designated_index = static_cast<int>(i);
    }
  }
  result.designated_strictly_first =
      result.designated_index == 0 &&
      (result.ranked.size() == 1 || result.adjacent_gaps[0] > 0);
  return result;
}

// ---- statement verification ------------------------------------------------

namespace {

int value_or(int value, int fallback) { return value >= 0 ? value : fallback; }

void fail_line(VerifyReport& report, const std::string& line) {
  report.details.push_back("FAIL: " + line);
}

// True iff some component is a K_t, or (t odd) a K_{t+1} minus a perfect
// matching -- the two families attaining rho = t-1.
bool equality_class_member(const Graph& g, int t) {
  for (const auto& comp : connected_components(g)) {
    const int c = static_cast<int>(comp.size());
    if (c == t) {
      const Graph sub = induced_subgraph(g, comp);
      if (sub.size() == binom2(t)) return true;
    }
    if (t % 2 == 1 && c == t + 1) {
      const Graph sub = induced_subgraph(g, comp);
      bool regular = true;
      for (int v = 0; v < sub.order(); ++v) {
        regular = regular && sub.degree(v) == t - 1;
      }
      // The only (t-1)-regular graph on t+1 vertices: the complement of a
      // perfect matching.
      if (regular) return true;
    }
  }
  return false;
}

VerifyReport verify_join_bound(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "thm1.1";
  const int n = value_or(params.n, 13);
  const int s = value_or(params.s, 2);
  const int t = value_or(params.t, 3);
  require(s >= 2 && t >= s && n >= s + t, "needs 2 <= s <= t and n >= s + t");
  require(n <= 1024, "desk-scale cap: n <= 1024");
  const auto [p, q] = tait_shape(n, s, t);
  (void)p;
  require(q == t, "needs t | n - s + 1 so the tail is all K_t blocks");

  const Graph g = tait_graph(n, s, t);
  const RhoResult rho = rho_enclosure(g, kWidth);
  const double bound = tait_bound(n, s, t);

  std::vector<std::vector<int>> classes(2);
  for (int v = 0; v < s - 1; ++v) classes[0].push_back(v);
  for (int v = s - 1; v < n; ++v) classes[1].push_back(v);
  const double quotient = quotient_rho(g, classes);

  const bool bound_inside =
      bound >= rho.interval.lo - kWidth && bound <= rho.interval.hi + kWidth;
  const bool quotient_inside = quotient >= rho.interval.lo - kWidth &&
                               quotient <= rho.interval.hi + kWidth;
  const bool agree = std::abs(quotient - bound) <= kWidth;

  report.details.push_back("rho enclosure     " + interval_text(rho.interval));
  report.details.push_back("closed-form bound " + fixed12(bound));
  report.details.push_back("quotient value    " + fixed12(quotient));
  if (!bound_inside) fail_line(report, "closed-form bound outside the enclosure");
  if (!quotient_inside) fail_line(report, "quotient value outside the enclosure");
  if (!agree) fail_line(report, "quotient value and closed-form bound disagree");
  report.pass = bound_inside && quotient_inside && agree;
  report.summary = "join construction at n=" + std::to_string(n) + ", s=" +
                   std::to_string(s) + ", t=" + std::to_string(t) +
                   (report.pass ? ": all three values agree within 1e-9"
                                : ": values disagree");
  return report;
}

VerifyReport verify_showdown(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "thm1.3";
  require(params.n > 0 && params.s > 0 && params.t > 0,
          "the showdown check needs n, s and t");
  const ShowdownResult res = candidate_showdown(params.n, params.s, params.t);
  for (std::size_t i = 0; i < res.ranked.size(); ++i) {
    const ShowdownEntry& e = res.ranked[i];
    std::string line = std::to_string(i + 1) + ". " + e.label + "  rho in " +
                       interval_text(e.rho) + "  " + e.description;
    if (e.designated) line += "  <- designated";
    report.details.push_back(line);
    if (i + 1 < res.ranked.size()) {
      report.details.push_back("   gap lower bound " +
                               fixed12(res.adjacent_gaps[i]));
    }
  }
  const bool gap_ok = res.ranked.size() == 1 || res.adjacent_gaps[0] >= 1e-6;
  report.pass = res.designated_strictly_first && gap_ok;
  report.summary =
      "designated candidate " +
      std::string(res.designated_strictly_first ? "ranks strictly first"
                                                : "does not rank first") +
      " at (n,s,t)=(" + std::to_string(params.n) + "," +
      std::to_string(params.s) + "," + std::to_string(params.t) + ")" +
      (res.ranked.size() > 1 && res.designated_strictly_first && !gap_ok
           ? " but the top gap is below 1e-6"
           : "");
  return report;
}

VerifyReport verify_star_argmax(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "thm1.4";
  const int t = params.t;
  require(t >= 3 && t <= 8, "needs 3 <= t <= 8");
  const int n_min = params.n > 0 ? params.n : value_or(params.n_min, t + 1);
  const int n_max = params.n > 0 ? params.n : value_or(params.n_max, 9);
  require(n_min >= 1 && n_min <= n_max && n_max <= 9,
          "desk-scale cap: orders 1..9");

  bool all_ok = true;
  for (int n = n_min; n <= n_max; ++n) {
    SearchSpec spec;
    spec.n = n;
    spec.connected_only = true;
    spec.constraint = SearchConstraint::k1t_minor_free(t);
    const SearchCertificate cert = search_extremal(spec);
    if (!cert.winner) {
      fail_line(report, "n=" + std::to_string(n) + ": no feasible graph");
      all_ok = false;
      continue;
    }
    const Graph winner = graph6_decode(*cert.winner);
    const Graph expected = n <= t         ? complete_graph(n)
                           : n == t + 1   ? h1t_complement(t)
                                          : subdivided_clique(n, t);
    bool ok = isomorphic(winner, expected);
    if (!ok) {
      report.counterexamples.push_back(*cert.winner);
    }
    const bool unique = cert.co_winners.empty();
    ok = ok && unique;

    std::string line = "n=" + std::to_string(n) + ": winner " + *cert.winner +
                       " rho in " + interval_text(*cert.winner_rho) +
                       (unique ? ", unique" : ", TIED");
    if (cert.runner_up) {
      mpq_class gap;
      const Trichotomy order =
          compare_rho_exact(winner, graph6_decode(*cert.runner_up), &gap);
      if (order != Trichotomy::Greater) {
        ok = false;
        fail_line(report, "n=" + std::to_string(n) +
                              ": exact comparison does not separate winner "
                              "and runner-up");
      } else {
        line += ", exact gap to runner-up >= " + fixed12(rational_down(gap));
      }
    }
    if (n == t + 1) {
      if (t % 2 == 0) {
        const double root = h1t_cubic_root(t, 1, t - 2);
        const bool inside = root >= cert.winner_rho->lo - kWidth &&
                            root <= cert.winner_rho->hi + kWidth;
        line += ", cubic root " + fixed12(root);
        if (!inside) {
          ok = false;
          fail_line(report,
                    "n=" + std::to_string(n) + ": cubic root misses enclosure");
        }
      } else {
        const bool at_cap = compare_rho_to(winner, t - 1) == Trichotomy::Equal;
        line += ", rho == t-1 exactly: ";
        line += at_cap ? "yes" : "NO";
        ok = ok && at_cap;
      }
    }
    report.details.push_back(line);
    if (!ok) {
      fail_line(report, "n=" + std::to_string(n) + ": winner mismatch");
    }
    all_ok = all_ok && ok;
  }
  report.pass = all_ok;
  report.summary = "connected star-minor-free argmax classification for t=" +
                   std::to_string(t) + ", orders " + std::to_string(n_min) +
                   ".." + std::to_string(n_max) +
                   (all_ok ? ": every order matches" : ": mismatch found");
  return report;
}

VerifyReport verify_rho_cap(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "thm1.5";
  const int t = params.t;
  require(t >= 3 && t <= 7, "needs 3 <= t <= 7");
  const int n_max = value_or(params.n_max, 8);
  require(n_max >= 1 && n_max <= 8, "desk-scale cap: orders 1..8");

  const MinorPattern star = MinorPattern::star_pattern(t);
  long long examined = 0, feasible = 0, at_cap = 0;
  for (int n = 1; n <= n_max; ++n) {
    enumerate_graphs(n, false, [&](const Graph& g) {
      ++examined;
      if (has_minor(g, star)) return;
      ++feasible;
      const Trichotomy order = compare_rho_to(g, t - 1);
      const bool member = equality_class_member(g, t);
      if (order == Trichotomy::Greater) {
        report.counterexamples.push_back(graph6_encode(g));
        fail_line(report, "rho above t-1: " + graph6_encode(g));
      } else if (order == Trichotomy::Equal) {
        ++at_cap;
        if (!member) {
          report.counterexamples.push_back(graph6_encode(g));
          fail_line(report, "equality outside the expected class: " +
                                graph6_encode(g));
        }
      } else if (member) {
        report.counterexamples.push_back(graph6_encode(g));
        fail_line(report, "expected equality missed: " + graph6_encode(g));
      }
    });
  }
  report.details.push_back(
      std::to_string(examined) + " classes examined, " +
      std::to_string(feasible) + " star-minor-free, " + std::to_string(at_cap) +
      " at rho = t-1");
  report.pass = report.counterexamples.empty();
  report.summary = "rho <= t-1 for t=" + std::to_string(t) + " up to order " +
                   std::to_string(n_max) +
                   (report.pass ? ": bound and equality class confirmed"
                                : ": " +
                                      std::to_string(
                                          report.counterexamples.size()) +
                                      " counterexample(s)");
  return report;
}

VerifyReport verify_edge_cap(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "lemma2.2";
  const int t = params.t;
  require(t >= 3 && t <= 7, "needs 3 <= t <= 7");
  const int n_min = value_or(params.n_min, t + 2);
  const int n_max = value_or(params.n_max, 9);
  require(n_min >= t + 2, "the edge cap needs order at least t + 2");
  require(n_min <= n_max && n_max <= 9, "desk-scale cap: orders up to 9");

  const MinorPattern star = MinorPattern::star_pattern(t);
  bool all_ok = true;
  for (int n = n_min; n <= n_max; ++n) {
    const long long cap = binom2(t) + n - t;
    long long feasible = 0, max_edges = -1;
    enumerate_graphs(n, true, [&](const Graph& g) {
      if (has_minor(g, star)) return;
      ++feasible;
      const long long e = g.size();
      if (e > cap) {
        report.counterexamples.push_back(graph6_encode(g));
        fail_line(report, "over the cap at n=" + std::to_string(n) + ": " +
                              graph6_encode(g));
      }
      max_edges = std::max(max_edges, e);
    });
    const Graph witness = subdivided_clique(n, t);
    const bool witness_ok =
        !has_minor(witness, star) && witness.size() == cap;
    const bool attained = max_edges == cap;
    report.details.push_back(
        "n=" + std::to_string(n) + ": cap " + std::to_string(cap) + ", " +
        std::to_string(feasible) + " feasible, max edges " +
        std::to_string(max_edges) + (attained ? " (attained)" : " (NOT attained)") +
        (witness_ok ? "" : ", construction witness failed"));
    all_ok = all_ok && attained && witness_ok;
  }
  report.pass = all_ok && report.counterexamples.empty();
  report.summary = "edge cap C(t,2)+n-t for t=" + std::to_string(t) +
                   ", orders " + std::to_string(n_min) + ".." +
                   std::to_string(n_max) +
                   (report.pass ? ": holds and is attained at every order"
                                : ": violated or not attained");
  return report;
}

VerifyReport verify_property_criterion(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "lemma3.0";
  const int s = params.s, t = params.t;
  require(s >= 1 && t >= s, "needs 1 <= s <= t");
  require(t + 1 <= 8, "desk-scale cap: order t + 1 <= 8");

  long long examined = 0, holders = 0;
  enumerate_graphs(t + 1, true, [&](const Graph& g) {
    ++examined;
    const bool shortcut = has_st_property(g, s, t);
    const bool direct = has_st_property_by_definition(g, s, t);
    if (shortcut != direct) {
      report.counterexamples.push_back(graph6_encode(g));
      fail_line(report, "criterion and definition disagree: " +
                            graph6_encode(g));
    }
    if (direct) ++holders;
  });
  report.details.push_back(std::to_string(examined) +
                           " connected classes of order " +
                           std::to_string(t + 1) + ", " +
                           std::to_string(holders) + " with the property");
  report.pass = report.counterexamples.empty();
  report.summary =
      "complement-component criterion at order t+1 for (s,t)=(" +
      std::to_string(s) + "," + std::to_string(t) + ")" +
      (report.pass ? ": agrees with the definition everywhere"
                   : ": disagreement found");
  return report;
}

VerifyReport verify_property_edge_cap(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "lemma3.1";
  const int s = params.s, t = params.t;
  require(s >= 1 && t >= s, "needs 1 <= s <= t");
  require(t + 1 <= 8, "desk-scale cap: order t + 1 <= 8");
  const int beta = (t + 1) / (s + 1);
  const long long cap = binom2(t) + beta - 1;

  long long feasible = 0, max_edges = -1, attainers = 0;
  enumerate_graphs(t + 1, true, [&](const Graph& g) {
    if (!has_st_property(g, s, t)) return;
    ++feasible;
    const long long e = g.size();
    if (e > cap) {
      report.counterexamples.push_back(graph6_encode(g));
      fail_line(report, "over the cap: " + graph6_encode(g));
    }
    if (e == cap) ++attainers;
    max_edges = std::max(max_edges, e);
  });
  bool witness_ok = true;
  if (beta >= 2) {
    const Graph witness = star_forest_complement(s, t);
    witness_ok = has_st_property(witness, s, t) && witness.size() == cap &&
                 is_connected(witness);
    if (!witness_ok) fail_line(report, "star-forest complement witness failed");
  }
  const bool attained = max_edges == cap;
  report.details.push_back("cap " + std::to_string(cap) + " (beta=" +
                           std::to_string(beta) + "), " +
                           std::to_string(feasible) +
                           " connected property graphs, max edges " +
                           std::to_string(max_edges) + ", " +
                           std::to_string(attainers) + " attainer(s)");
  report.pass = report.counterexamples.empty() && attained && witness_ok;
  report.summary = "property edge cap at order t+1 for (s,t)=(" +
                   std::to_string(s) + "," + std::to_string(t) + ")" +
                   (report.pass ? ": holds and is attained" : ": failed");
  return report;
}

// The structure claim concerns the order-(t+1) components of the globally
// extremal join, which are first edge-maximal (so they sit at the
// C(t,2)+beta-1 cap) and are then forced to the star-forest complement by
// degree-majorization against the Perron weights.  The checkable rendering:
// the star-forest complement attains the cap, and it strictly dominates
// every other cap attainer both spectrally (exact comparison) and in the
// degree-majorization order the proof argument runs on.
VerifyReport verify_property_argmax(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "thm3.1";
  const int s = params.s, t = params.t;
  require(s >= 1 && t >= s, "needs 1 <= s <= t");
  require(t + 1 <= 8, "desk-scale cap: order t + 1 <= 8");
  const int beta = (t + 1) / (s + 1);
  require(beta >= 2, "the structure claim needs floor((t+1)/(s+1)) >= 2");
  const long long cap = binom2(t) + beta - 1;

  std::vector<Graph> attainers;
  enumerate_graphs(t + 1, true, [&](const Graph& g) {
    if (g.size() == cap && has_st_property(g, s, t)) attainers.push_back(g);
  });
  const Graph expected = star_forest_complement(s, t);
  const DegreeSequence expected_degrees = degree_sequence(expected);

  bool present = false;
  bool ok = true;
  for (const Graph& g : attainers) {
    if (isomorphic(g, expected)) {
      present = true;
      continue;
    }
    mpq_class gap;
    const Trichotomy order = compare_rho_exact(expected, g, &gap);
    const DegreeSequence degrees = degree_sequence(g);
    const bool dominated =
        majorizes(degrees, expected_degrees) && degrees != expected_degrees;
    std::string line = "other attainer " + graph6_encode(g) + ": ";
    if (order == Trichotomy::Greater) {
      line += "rho gap >= " + fixed12(rational_down(gap));
    } else {
      line += "NOT spectrally dominated";
      report.counterexamples.push_back(graph6_encode(g));
      ok = false;
    }
    line += dominated ? ", degree-majorized" : ", NOT degree-majorized";
    if (!dominated) {
      report.counterexamples.push_back(graph6_encode(g));
      ok = false;
    }
    report.details.push_back(line);
  }
  if (!present) {
    fail_line(report, "star-forest complement is not a cap attainer");
    ok = false;
  }
  report.details.push_back(std::to_string(attainers.size()) +
                           " attainer(s) at the cap " + std::to_string(cap));
  report.pass = ok;
  report.summary =
      "order-(t+1) cap-attainer structure for (s,t)=(" + std::to_string(s) +
      "," + std::to_string(t) + ")" +
      (ok ? ": the star-forest complement strictly dominates the rest"
          : ": failed");
  return report;
}

VerifyReport verify_dense_classification(const VerifyParams& params) {
  VerifyReport report;
  report.tag = "lemma3.3";
  const int t = params.t;
  require(t >= 3, "needs t >= 3");

  if (t == 8) {
    // Order 10 is past the exhaustive cap; run the direct construction
    // checks instead: the Petersen complement must carry the property.
    std::vector<int> ss;
    if (params.s > 0) {
      ss.push_back(params.s);
    } else {
      for (int s = 4; s <= 8; ++s) ss.push_back(s);
    }
    const Graph pc = petersen_complement();
    bool all_ok = true;
    for (const int s : ss) {
      require(s >= 1 && s <= 8, "needs 1 <= s <= t");
      const bool ok = has_st_property(pc, s, 8);
      report.details.push_back("petersen complement has the (" +
                               std::to_string(s) + ",8)-property: " +
                               (ok ? "yes" : "NO"));
      all_ok = all_ok && ok;
    }
    report.pass = all_ok;
    report.summary = std::string("petersen-complement property checks at t=8") +
                     (all_ok ? ": all pass" : ": failure");
    return report;
  }

  const int s = params.s;
  require(s >= 1 && s <= t, "needs 1 <= s <= t");
  require(t + 2 <= 8, "desk-scale cap: order t + 2 <= 8 (t = 8 runs the "
                      "direct checks)");
  const int beta = (t + 1) / (s + 1);
  require(beta <= 2, "the classification assumes floor((t+1)/(s+1)) <= 2");
  const long long cap = binom2(t) + 2;

  // Classification targets: every H_{a,b,c} with a+b+c = t-1.
  std::vector<Graph> targets;
  std::vector<std::string> target_names;
  for (int a = 0; a <= t - 3; ++a) {
    for (int b = 1; a + b <= t - 2; ++b) {
      const int c = t - 1 - a - b;
      targets.push_back(h_abc(a, b, c));
      target_names.push_back("H_{" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + "}");
    }
  }

  long long feasible = 0, attainers = 0;
  std::vector<long long> matched(targets.size(), 0);
  enumerate_graphs(t + 2, true, [&](const Graph& g) {
    if (!has_st_property(g, s, t)) return;
    ++feasible;
    const long long e = g.size();
    if (e > cap) {
      report.counterexamples.push_back(graph6_encode(g));
      fail_line(report, "over the cap: " + graph6_encode(g));
      return;
    }
    if (e != cap) return;
    ++attainers;
    const Graph gc = complement(g);
    bool classified = false;
    for (std::size_t i = 0; i < targets.size() && !classified; ++i) {
      classified = isomorphic(gc, targets[i]);
      if (classified) ++matched[i];
    }
    if (!classified) {
      report.counterexamples.push_back(graph6_encode(g));
      fail_line(report, "attainer complement unclassified: " +
                            graph6_encode(g));
    }
  });

  // The classification itself is one-directional (attainers are forced into
  // the target list; not every target complement need carry the property),
  // so an empty attainer set is a vacuous pass.  The constructive half only
  // arises at beta = 2, where the once-subdivided star-forest complement is
  // an order-(t+2) attainer by construction.
  bool witness_ok = true;
  if (beta == 2) {
    const Graph witness = subdivided_complement(s, t);
    witness_ok = has_st_property(witness, s, t) && witness.size() == cap;
    report.details.push_back(
        std::string("once-subdivided star-forest complement attains: ") +
        (witness_ok ? "yes" : "NO"));
    if (!witness_ok)
      fail_line(report, "once-subdivided complement witness failed");
  }

  std::string matches;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (matched[i] == 0) continue;
    if (!matches.empty()) matches += ", ";
    matches += target_names[i] + " x" + std::to_string(matched[i]);
  }
  report.details.push_back(
      std::to_string(feasible) + " connected property graphs of order " +
      std::to_string(t + 2) + ", " + std::to_string(attainers) +
      " at the cap " + std::to_string(cap) +
      (attainers == 0 ? " (classification vacuous)"
                      : "; matched: " + matches) +
      "; the order-10 petersen case cannot arise here");
  report.pass = report.counterexamples.empty() && witness_ok;
  report.summary = "order-(t+2) attainer classification for (s,t)=(" +
                   std::to_string(s) + "," + std::to_string(t) + ")" +
                   (report.pass ? ": every attainer complement matches"
                                : ": failed");
  return report;
}

}  // namespace

std::vector<std::string> verify_tags() {
  return {"thm1.1", "thm1.3", "thm1.4", "thm1.5", "lemma2.2",
          "lemma3.0", "lemma3.1", "thm3.1", "lemma3.3"};
}

VerifyReport verify_theorem(const std::string& tag, const VerifyParams& params) {
  if (tag == "thm1.1") return verify_join_bound(params);
  if (tag == "thm1.3") return verify_showdown(params);
  if (tag == "thm1.4") return verify_star_argmax(params);
  if (tag == "thm1.5") return verify_rho_cap(params);
  if (tag == "lemma2.2") return verify_edge_cap(params);
  if (tag == "lemma3.0") return verify_property_criterion(params);
  if (tag == "lemma3.1") return verify_property_edge_cap(params);
  if (tag == "thm3.1") return verify_property_argmax(params);
  if (tag == "lemma3.3") return verify_dense_classification(params);
  std::string known;
  for (const std::string& known_tag : verify_tags()) {
    known += (known.empty() ? "" : ", ") + known_tag;
  }
  throw DomainError("unknown verification tag '" + tag + "' (known: " + known +
                    ")");
}

}  // namespace spex
