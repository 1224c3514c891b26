#include <benchmark/benchmark.h>

#include "acyclic/gadgets.hpp"
#include "acyclic/symmetry.hpp"

using namespace acyclic;

static void BM_AutomorphismsGd(benchmark::State& state) {
    GadgetGraph gd = g_d(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = automorphisms(gd.graph);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_AutomorphismsGd)->DenseRange(3, 5);

static void BM_CountClassesChain(benchmark::State& state) {
    GadgetGraph chain = chain_gadget(3, 2);
    for (auto _ : state) {
        auto r = count_classes(chain.graph, 3, Relation::swap_auto, ColouringKind::acyclic);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_CountClassesChain);
