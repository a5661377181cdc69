#include <benchmark/benchmark.h>

#include "hyperlat/canonical.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/resolution_graph.hpp"

using namespace hyperlat;

namespace {

// kappa_n pushed away from the chamber: sign flips, a Cremona reflection
// and a coordinate swap per round.
LatticeVector scrambled(std::size_t n, int rounds) {
  const Lattice lattice = Lattice::diagonal(n);
  LatticeVector root = LatticeVector::unit(n + 1, 0);
  for (std::size_t i = 1; i <= 3; ++i) root[i] = -1;
  const Generator cremona = Generator::reflect(root);
  LatticeVector k = kappa(n);
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t i = 1; i <= 3; ++i)
      if (k[i] < 0) k = Generator::flip(i).apply(lattice, k);
    k = cremona.apply(lattice, k);
    k = Generator::swap(3, 1 + (r % n)).apply(lattice, k);
  }
  return k;
}

DualGraph e8() {
  std::vector<Vertex> v(8, Vertex{-2, 0});
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < 7; ++i) e.push_back({i, i + 1, 1});
  e.push_back({2, 7, 1});
  return DualGraph::from_edges(v, e);
}

}  // namespace

static void BM_FundamentalWalls(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_walls(n));
}
BENCHMARK(BM_FundamentalWalls)->DenseRange(3, 8);

static void BM_Canonicalize(benchmark::State& state) {
  const LatticeVector k = scrambled(8, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(k));
  state.counters["a0"] = static_cast<double>(k[0]);
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(8)->Arg(16);

static void BM_FundamentalCycleE8(benchmark::State& state) {
  const DualGraph g = e8();
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_cycle(g));
}
BENCHMARK(BM_FundamentalCycleE8);

static void BM_Signature(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const IntMatrix m = e8().matrix();
  IntMatrix big(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) big(i, j) = (i < 8 && j < 8) ? m(i, j) : (i == j ? -1 : 0);
  for (auto _ : state) benchmark::DoNotOptimize(signature(big));
}
BENCHMARK(BM_Signature)->Arg(8)->Arg(16);
BENCHMARK_MAIN();
