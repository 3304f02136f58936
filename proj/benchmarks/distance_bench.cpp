#include <benchmark/benchmark.h>

#include "deepvote/metrics.hpp"
#include "deepvote/sampling.hpp"

using namespace deepvote;

namespace {

void pairwise(benchmark::State& state, const DistanceSpec& spec) {
  const auto m = static_cast<std::size_t>(state.range(0));
  Sampler rng(9);
  std::vector<Ranking> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(rng.ranking(m));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance(spec, pool[i % 64], pool[(i * 7 + 3) % 64]));
    ++i;
  }
}

void BM_Kendall(benchmark::State& s) { pairwise(s, DistanceSpec::kendall()); }
void BM_Hamming(benchmark::State& s) { pairwise(s, DistanceSpec::hamming()); }
void BM_Cayley(benchmark::State& s) { pairwise(s, DistanceSpec::cayley()); }
void BM_Minkowski3(benchmark::State& s) { pairwise(s, DistanceSpec::minkowski(3)); }
void BM_Chebyshev(benchmark::State& s) { pairwise(s, DistanceSpec::minkowski(kInfiniteOrder)); }
void BM_WeightedHamming(benchmark::State& s) {
  pairwise(s, DistanceSpec::weighted_hamming(WeightMatrix::top_heavy(static_cast<std::size_t>(s.range(0)))));
}

}  // namespace

BENCHMARK(BM_Kendall)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Hamming)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Cayley)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Minkowski3)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_Chebyshev)->RangeMultiplier(2)->Range(4, 64);
BENCHMARK(BM_WeightedHamming)->RangeMultiplier(2)->Range(4, 64);
