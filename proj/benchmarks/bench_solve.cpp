#include <benchmark/benchmark.h>

#include "zchrom/families.hpp"
#include "zchrom/graph.hpp"
#include "zchrom/solve.hpp"

using namespace zchrom;

namespace {

void BM_exact_z_clique_core(benchmark::State& state) {
    auto g = build_gn(3).graph;
    for (auto _ : state) {
        auto r = exact_z(g);
        benchmark::DoNotOptimize(r.value);
    }
}

void BM_exact_z_atom(benchmark::State& state) {
    auto g = build_tree_atom(static_cast<int>(state.range(0))).graph;
    for (auto _ : state) {
        auto r = exact_z(g);
        benchmark::DoNotOptimize(r.value);
    }
}

void BM_spectrum_matched(benchmark::State& state) {
    auto g = matched_minus(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = z_spectrum(g);
        benchmark::DoNotOptimize(r.achievable.size());
    }
}

void BM_edge_colorings(benchmark::State& state) {
    auto g = complete_bipartite(3, 3);
    for (auto _ : state) {
        auto all = enumerate_three_edge_colorings(g, 100);
        benchmark::DoNotOptimize(all.size());
    }
}

void BM_oracle(benchmark::State& state) {
    auto g = cycle_graph(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = brute_force_oracle(g);
        benchmark::DoNotOptimize(r.z);
    }
}

}  // namespace

BENCHMARK(BM_exact_z_clique_core)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exact_z_atom)->Arg(4)->Arg(5)->Arg(6);
BENCHMARK(BM_spectrum_matched)->Arg(3)->Arg(4);
BENCHMARK(BM_edge_colorings);
BENCHMARK(BM_oracle)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
