#include <benchmark/benchmark.h>

#include "acyclic/gadgets.hpp"
#include "acyclic/reductions.hpp"
#include "acyclic/solver.hpp"

using namespace acyclic;

static void BM_ChromaticNumberGd(benchmark::State& state) {
    GadgetGraph gd = g_d(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = acyclic_chromatic_number(gd.graph);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ChromaticNumberGd)->DenseRange(2, 5);

static void BM_DecideColemanCaiK4(benchmark::State& state) {
    ReductionOutput out = coleman_cai(complete(4), 3);
    for (auto _ : state) {
        auto r = is_k_acyclic_colourable(out.graph, 3);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_DecideColemanCaiK4);

static void BM_EnumerateChain(benchmark::State& state) {
    GadgetGraph chain = chain_gadget(3, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = enumerate_acyclic_colourings(chain.graph, 3, 1'000'000);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_EnumerateChain)->DenseRange(1, 3);

static void BM_SolveC2C5(benchmark::State& state) {
    ReductionOutput out = construct_bipartite_delta_k_plus_1(cycle(5), 3);
    for (auto _ : state) {
        auto r = is_k_acyclic_colourable(out.graph, 3);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SolveC2C5);

BENCHMARK_MAIN();
