#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "lzkit/codec.hpp"
#include "lzkit/ensemble.hpp"
#include "lzkit/inference.hpp"
#include "lzkit/parsing.hpp"
#include "lzkit/rng.hpp"
#include "lzkit/sequence.hpp"
#include "lzkit/sequential.hpp"

using namespace lzkit;

namespace {

Sequence coin_bits(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Symbol> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = rng.bernoulli(0.5) ? 1 : 0;
  return Sequence(Alphabet::binary(), std::move(bits));
}

Sequence byte_soup(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Symbol> symbols(n);
  for (std::size_t i = 0; i < n; ++i)
    symbols[i] = static_cast<Symbol>(rng.below(256));
  return Sequence(Alphabet::bytes(), std::move(symbols));
}

void BM_IncrementalParse(benchmark::State& state) {
  const Sequence x = coin_bits(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(incremental_parse(x));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IncrementalParse)->Arg(1 << 12)->Arg(1 << 16);

void BM_IncrementalParseBytes(benchmark::State& state) {
  const Sequence x = byte_soup(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(incremental_parse(x));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IncrementalParseBytes)->Arg(1 << 12)->Arg(1 << 16);

void BM_CrossParse(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Sequence x = coin_bits(n, 3);
  const Sequence y = coin_bits(n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_parse(x, y));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CrossParse)->Arg(1 << 12)->Arg(1 << 16);

void BM_ConditionalMetric(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Sequence x = coin_bits(n, 5);
  const Sequence y = coin_bits(n, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(conditional_metric(x, y));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ConditionalMetric)->Arg(512)->Arg(1 << 12);

void BM_Encode(benchmark::State& state) {
  const Sequence x = byte_soup(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lz78_encode(x));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Encode)->Arg(1 << 12)->Arg(1 << 16);

void BM_Decode(benchmark::State& state) {
  const Sequence x = byte_soup(static_cast<std::size_t>(state.range(0)), 8);
  const BitStream stream = lz78_encode(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lz78_decode(stream, x.alphabet()));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Decode)->Arg(1 << 12)->Arg(1 << 16);

void BM_EmpiricalEntropy(benchmark::State& state) {
  const Sequence x = coin_bits(1 << 16, 9);
  const std::uint32_t k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(empirical_entropy(x, k));
  }
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_EmpiricalEntropy)->Arg(0)->Arg(3);

void BM_Predict(benchmark::State& state) {
  const Sequence x = coin_bits(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        predict_sequence(x, 1.0, PredictionMode::kDeterministic));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Predict)->Arg(1 << 12)->Arg(1 << 16);

void BM_RdPoint(benchmark::State& state) {
  const UniversalDistribution dist =
      UniversalDistribution::build(8, Alphabet::binary());
  const Sequence x = coin_bits(8, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rd_point(x, 0.25, dist));
  }
}
BENCHMARK(BM_RdPoint);

}  // namespace

BENCHMARK_MAIN();
