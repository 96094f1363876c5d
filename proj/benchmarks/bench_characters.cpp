#include <benchmark/benchmark.h>

#include "vframe/characters.hpp"

namespace {

using namespace vframe;

void BM_IsingCharacterCached(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ising_character(IsingLabel::kSixteenth));
}
BENCHMARK(BM_IsingCharacterCached);

void BM_SeriesPower(benchmark::State& state) {
  const QSeries ch0 = ising_character(IsingLabel::kZero);
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qs_pow(ch0, m));
}
BENCHMARK(BM_SeriesPower)->Arg(8)->Arg(24)->Arg(48);

void BM_CodeVoaCharacter(benchmark::State& state) {
  const LinearCode c = reed_muller(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(code_voa_character(c));
}
BENCHMARK(BM_CodeVoaCharacter)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
