#include <benchmark/benchmark.h>

#include <vector>

#include "nrgen/alias.hpp"
#include "nrgen/baselines.hpp"
#include "nrgen/bench.hpp"
#include "nrgen/generators.hpp"
#include "nrgen/random.hpp"

namespace {

using namespace nrgen;

WeightSequence pareto_weights(std::int64_t n) {
  RandomStream rng(1, StreamId::weights);
  return bench::make_weights(static_cast<std::uint64_t>(n), 10.0, bench::WeightLaw::pareto, rng);
}

void BM_AliasBuild(benchmark::State& state) {
  const auto w = pareto_weights(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(AliasTable::build(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AliasBuild)->RangeMultiplier(8)->Range(1 << 10, 1 << 22);

void BM_AliasSample(benchmark::State& state) {
  const auto t = AliasTable::build(pareto_weights(state.range(0)));
  RandomStream rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(t.sample(rng));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_AliasSample)->Arg(1 << 10)->Arg(1 << 20);

void BM_Poisson(benchmark::State& state) {
  const double mean = static_cast<double>(state.range(0));
  RandomStream rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(poisson(rng, mean));
}
BENCHMARK(BM_Poisson)->Arg(1)->Arg(9)->Arg(10)->Arg(1000)->Arg(1 << 24);

void BM_UniformIndex(benchmark::State& state) {
  RandomStream rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(uniform_index(rng, 1'000'003));
}
BENCHMARK(BM_UniformIndex);

void BM_NrSimple(benchmark::State& state) {
  const NrEventSampler sampler(pareto_weights(state.range(0)), GenOptions{state.range(1) != 0, Corruption::none});
  RandomStream rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample_simple(rng));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sampler.budget_mean()));
}
BENCHMARK(BM_NrSimple)->ArgsProduct({{1 << 14, 1 << 18, 1 << 20}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_NrMultigraph(benchmark::State& state) {
  const NrEventSampler sampler(pareto_weights(state.range(0)));
  RandomStream rng(6);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample_multigraph(rng));
}
BENCHMARK(BM_NrMultigraph)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_ChungLuSkip(benchmark::State& state) {
  const ChungLuSkipSampler sampler(pareto_weights(state.range(0)));
  RandomStream rng(7);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(rng));
}
BENCHMARK(BM_ChungLuSkip)->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_ChungLuPreprocess(benchmark::State& state) {
  const auto w = pareto_weights(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ChungLuSkipSampler(w));
}
BENCHMARK(BM_ChungLuPreprocess)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_NrOracle(benchmark::State& state) {
  const auto w = pareto_weights(state.range(0));
  RandomStream rng(8);
  for (auto _ : state) benchmark::DoNotOptimize(generate_nr_oracle(w, rng));
}
BENCHMARK(BM_NrOracle)->Arg(1 << 10)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

void BM_ErArrivals(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const double p = 10.0 / static_cast<double>(n - 1);
  RandomStream rng(9);
  for (auto _ : state) benchmark::DoNotOptimize(generate_er(n, p, rng));
}
BENCHMARK(BM_ErArrivals)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
