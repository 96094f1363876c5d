#include <benchmark/benchmark.h>

#include <random>

#include "vframe/gf2.hpp"
#include "vframe/orbifold.hpp"

namespace {

using namespace vframe;

LinearCode random_code(std::size_t n, std::size_t rows, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<BinaryWord> gens;
  for (std::size_t r = 0; r < rows; ++r) {
    BinaryWord w(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng)) w.set(i);
    }
    gens.push_back(w);
  }
  return LinearCode::from_generators(n, gens);
}

void BM_Elimination(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(random_code(n, n / 2, 7));
}
BENCHMARK(BM_Elimination)->Arg(32)->Arg(64)->Arg(128);

void BM_Dual(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const LinearCode c = random_code(n, n / 2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(dual(c));
}
BENCHMARK(BM_Dual)->Arg(32)->Arg(64)->Arg(128);

void BM_ExhaustiveEnumerator(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const LinearCode c = random_code(48, k, 13);
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_weight_enumerator(c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(c.size()));
}
BENCHMARK(BM_ExhaustiveEnumerator)->Arg(12)->Arg(16)->Arg(20)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_MacWilliams(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightEnumerator we = exhaustive_weight_enumerator(random_code(n, 12, 17));
  for (auto _ : state) benchmark::DoNotOptimize(macwilliams_transform(we));
}
BENCHMARK(BM_MacWilliams)->Arg(24)->Arg(64)->Arg(128);

void BM_Pipeline(benchmark::State& state) {
  const StructureCodes s(reed_muller(2, 4), reed_muller(1, 4));
  for (auto _ : state) benchmark::DoNotOptimize(moonshine_pipeline(s));
}
BENCHMARK(BM_Pipeline);

}  // namespace
