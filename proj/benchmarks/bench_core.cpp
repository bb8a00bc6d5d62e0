#include <benchmark/benchmark.h>

#include <random>

#include "pvcastle/castle.hpp"
#include "pvcastle/modular.hpp"
#include "pvcastle/pv.hpp"
#include "pvcastle/reps.hpp"

using namespace pvcastle;

namespace {

Solution sol(long a, std::vector<long> parts) {
  std::vector<Int> ps(parts.begin(), parts.end());
  return Solution(Int(a), std::move(ps));
}

RationalMatrix orbit_of(const Solution& s, std::uint64_t seed) {
  Triplet t = tensor_triplet(s);
  std::mt19937_64 rng(seed);
  std::vector<Rat> v(t.space_dim());
  for (auto& e : v) e = static_cast<long>(rng() % 11) - 5;
  return orbit_matrix(t, v);
}

void BM_RankExactOrbit12(benchmark::State& state) {
  RationalMatrix orbit = orbit_of(sol(3, {2}), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(orbit));
}
BENCHMARK(BM_RankExactOrbit12);

void BM_RankExactOrbit40(benchmark::State& state) {
  RationalMatrix orbit = orbit_of(sol(5, {4}), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_exact(orbit));
}
BENCHMARK(BM_RankExactOrbit40);

void BM_RankModularOrbit40(benchmark::State& state) {
  RationalMatrix orbit = orbit_of(sol(5, {4}), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(rank_modular(orbit, kDefaultPrime));
}
BENCHMARK(BM_RankModularOrbit40);

void BM_Enumerate(benchmark::State& state) {
  const Int max_part(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_solutions(Int(2), max_part, 4));
}
BENCHMARK(BM_Enumerate)->Arg(200)->Arg(10000)->Arg(1000000);

void BM_TensorTriplet132(benchmark::State& state) {
  const Solution s = sol(2, {3, 11});
  for (auto _ : state) benchmark::DoNotOptimize(tensor_triplet(s));
}
BENCHMARK(BM_TensorTriplet132);

void BM_SymPowerConstruction(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sym_power(3, 2));
}
BENCHMARK(BM_SymPowerConstruction);

void BM_FindGeneric40(benchmark::State& state) {
  Triplet t = tensor_triplet(sol(5, {4}));
  SearchParams params;
  for (auto _ : state) {
    params.seed = state.iterations();
    benchmark::DoNotOptimize(find_generic(t, params));
  }
}
BENCHMARK(BM_FindGeneric40);

}  // namespace

BENCHMARK_MAIN();
