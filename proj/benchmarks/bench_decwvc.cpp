#include <benchmark/benchmark.h>

#include "decwvc/baselines.hpp"
#include "decwvc/engine.hpp"
#include "decwvc/generate.hpp"

using namespace decwvc;

namespace {

Graph testbed_graph(TopologyKind kind, std::size_t order, unsigned degree) {
    Graph g = generate({kind, order, degree}, 7);
    return assign_weights(g, WeightDistribution{WeightKind::Uniform}, 8);
}

void BM_GenerateRandom(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate({TopologyKind::Random, order, 10}, seed++));
    }
}
BENCHMARK(BM_GenerateRandom)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_GenerateScaleFree(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            generate({TopologyKind::ScaleFree, order, 10}, seed++));
    }
}
BENCHMARK(BM_GenerateScaleFree)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_GenerateSmallWorld(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            generate({TopologyKind::SmallWorld, order, 10}, seed++));
    }
}
BENCHMARK(BM_GenerateSmallWorld)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_ProtocolRun(benchmark::State& state) {
    const Graph g = testbed_graph(TopologyKind::ScaleFree,
                                  static_cast<std::size_t>(state.range(0)), 15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(g, OptimizeRule::Safe));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(g.order()));
}
BENCHMARK(BM_ProtocolRun)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_Greedy(benchmark::State& state) {
    const Graph g = testbed_graph(TopologyKind::Random,
                                  static_cast<std::size_t>(state.range(0)), 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(greedy_mwvc(g));
    }
}
BENCHMARK(BM_Greedy)->Arg(1024)->Arg(4096);

void BM_BruteForce(benchmark::State& state) {
    const Graph g = testbed_graph(TopologyKind::Random,
                                  static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_force_mwvc(g));
    }
}
BENCHMARK(BM_BruteForce)->Arg(16)->Arg(20)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
