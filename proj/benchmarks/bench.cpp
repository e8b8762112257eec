// Microbenchmarks for the hot paths: canonical forms, isomorph-free
// enumeration, minor searches, and spectral-radius enclosures.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <spex/canonical.hpp>
#include <spex/charpoly.hpp>
#include <spex/enumerate.hpp>
#include <spex/families.hpp>
#include <spex/graph.hpp>
#include <spex/minor.hpp>
#include <spex/spectral.hpp>

namespace {

std::vector<spex::Graph> random_graphs(int n, double p, int count,
                                       unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(p);
  std::vector<spex::Graph> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    spex::Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (flip(rng)) g.add_edge(u, v);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

void BM_CanonicalCode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(n, 0.5, 64, 7u);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spex::canonical_code(graphs[i]));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(BM_CanonicalCode)->Arg(6)->Arg(8)->Arg(10);

void BM_EnumerateConnected(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    spex::enumerate_graphs(n, true, [&](const spex::Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7);

void BM_StarMinor(benchmark::State& state) {
  const auto hosts = random_graphs(9, 0.35, 64, 11u);
  const spex::MinorPattern star = spex::MinorPattern::star_pattern(5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spex::has_minor(hosts[i], star));
    i = (i + 1) % hosts.size();
  }
}
BENCHMARK(BM_StarMinor);

void BM_BicliqueMinor(benchmark::State& state) {
  const auto hosts = random_graphs(8, 0.4, 64, 13u);
  const spex::MinorPattern pattern = spex::MinorPattern::biclique(2, 4);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spex::has_minor(hosts[i], pattern));
    i = (i + 1) % hosts.size();
  }
}
BENCHMARK(BM_BicliqueMinor);

void BM_RhoEnclosurePetersen(benchmark::State& state) {
  const spex::Graph g = spex::petersen();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spex::rho_enclosure(g));
  }
}
BENCHMARK(BM_RhoEnclosurePetersen);

void BM_RhoEnclosureJoin(benchmark::State& state) {
  const spex::Graph g = spex::extremal_candidate(59, 2, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(spex::rho_enclosure(g));
  }
}
BENCHMARK(BM_RhoEnclosureJoin);

void BM_CharPolyExact(benchmark::State& state) {
  const spex::Graph g = spex::petersen_complement();
  for (auto _ : state) {
    benchmark::DoNotOptimize(spex::char_poly(g));
  }
}
BENCHMARK(BM_CharPolyExact);

}  // namespace

BENCHMARK_MAIN();
