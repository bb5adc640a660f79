#include <benchmark/benchmark.h>

#include <random>

#include "cannonball/multicolor.hpp"
#include "cannonball/verify.hpp"

using namespace cannonball;

namespace {

CannonballGraph random_window(int layers, int side, int max_demand, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> demand(0, max_demand);
  GridRegion region(StackingSequence::fcc(layers), LayerBox{0, side - 1, 0, side - 1});
  std::vector<DemandEntry> demands;
  for (const auto& v : region.vertices()) {
    if (int d = demand(rng); d > 0) demands.push_back({v, d});
  }
  return build_graph(region, demands);
}

void BM_Solve(benchmark::State& state) {
  const auto side = static_cast<int>(state.range(0));
  auto g = random_window(4, side, 50, 7);
  for (auto _ : state) benchmark::DoNotOptimize(solve(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.support().size()));
}
BENCHMARK(BM_Solve)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_NaiveSolve(benchmark::State& state) {
  auto g = random_window(4, static_cast<int>(state.range(0)), 50, 7);
  for (auto _ : state) benchmark::DoNotOptimize(naive_solve(g));
}
BENCHMARK(BM_NaiveSolve)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_CliqueNumbers(benchmark::State& state) {
  auto g = random_window(4, static_cast<int>(state.range(0)), 50, 11);
  for (auto _ : state) benchmark::DoNotOptimize(clique_numbers(g));
}
BENCHMARK(BM_CliqueNumbers)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
  auto g = random_window(4, static_cast<int>(state.range(0)), 50, 13);
  auto f = solve(g).assignment;
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, f));
}
BENCHMARK(BM_Verify)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Oracle(benchmark::State& state) {
  auto g = random_window(1, 3, static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(exact_multichromatic(g, 64));
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
