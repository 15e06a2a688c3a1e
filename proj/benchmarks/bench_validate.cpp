#include <benchmark/benchmark.h>

#include "zchrom/coloring.hpp"
#include "zchrom/graph.hpp"
#include "zchrom/reduction.hpp"
#include "zchrom/solve.hpp"
#include "zchrom/validate.hpp"

using namespace zchrom;

namespace {

struct Replicated {
    Graph graph;
    Coloring coloring;
};

// Disjoint copies of the decision instance over K_4, each carrying the
// lifted coloring; used to expose the validator's growth rate.
Replicated make_replicated(int copies) {
    auto inst = build_hardness_instance(complete_graph(4));
    auto theta = three_edge_coloring(complete_graph(4));
    auto base = lift_edge_coloring(inst, *theta);
    Graph g = inst.graph;
    Coloring c = base;
    for (int i = 1; i < copies; ++i) {
        g = disjoint_union(g, inst.graph);
        c.colors.insert(c.colors.end(), base.colors.begin(), base.colors.end());
    }
    return {std::move(g), std::move(c)};
}

void BM_z_validation(benchmark::State& state) {
    auto rep = make_replicated(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = is_z_coloring(rep.graph, rep.coloring);
        benchmark::DoNotOptimize(r.ok);
    }
    state.SetComplexityN(rep.graph.vertex_count() + rep.graph.edge_count());
}

void BM_validate_all(benchmark::State& state) {
    auto rep = make_replicated(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = validate_all(rep.graph, rep.coloring);
        benchmark::DoNotOptimize(r.z);
    }
}

void BM_certificate_cross_check(benchmark::State& state) {
    auto rep = make_replicated(1);
    auto z = is_z_coloring(rep.graph, rep.coloring);
    for (auto _ : state) {
        bool ok = certificate_valid(rep.graph, rep.coloring, *z.certificate);
        benchmark::DoNotOptimize(ok);
    }
}

}  // namespace

BENCHMARK(BM_z_validation)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Complexity(benchmark::oN);
BENCHMARK(BM_validate_all)->Arg(1)->Arg(4);
BENCHMARK(BM_certificate_cross_check);
