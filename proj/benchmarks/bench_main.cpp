#include <benchmark/benchmark.h>

#include <random>

#include "hyperlag/clique.hpp"
#include "hyperlag/colex.hpp"
#include "hyperlag/compression.hpp"
#include "hyperlag/enumerate.hpp"
#include "hyperlag/lagrangian.hpp"

using namespace hyperlag;

namespace {

Hypergraph random_graph(int r, int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution keep(density);
    std::vector<RSet> edges;
    for (const RSet& e : all_subsets(n, r)) {
        if (keep(rng)) edges.push_back(e);
    }
    if (edges.empty()) edges.push_back(all_subsets(n, r).front());
    return Hypergraph(r, n, edges);
}

void bm_growth_step(benchmark::State& state) {
    const Hypergraph g = random_graph(3, static_cast<int>(state.range(0)), 0.5, 1);
    Weighting x = Weighting::uniform(static_cast<std::size_t>(g.vertex_count()));
    for (auto _ : state) {
        x = growth_step(g, x);
        benchmark::DoNotOptimize(x);
    }
    state.SetLabel(std::to_string(g.edge_count()) + " edges");
}
BENCHMARK(bm_growth_step)->Arg(6)->Arg(10)->Arg(16);

void bm_maximize(benchmark::State& state) {
    const Hypergraph g = random_graph(3, static_cast<int>(state.range(0)), 0.5, 2);
    for (auto _ : state) benchmark::DoNotOptimize(maximize(g).lambda_value);
}
BENCHMARK(bm_maximize)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void bm_colex_rank_unrank(benchmark::State& state) {
    std::uint64_t k = 0;
    for (auto _ : state) {
        const RSet s = colex_unrank(5, k);
        benchmark::DoNotOptimize(colex_rank(s));
        k = (k + 7919) % 1'000'000;
    }
}
BENCHMARK(bm_colex_rank_unrank);

void bm_enumerate(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(lab::enumerate_graphs(3, 6, static_cast<std::uint64_t>(state.range(0)), true).size());
    }
}
BENCHMARK(bm_enumerate)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_max_clique(benchmark::State& state) {
    const Hypergraph g = random_graph(3, static_cast<int>(state.range(0)), 0.7, 3);
    for (auto _ : state) benchmark::DoNotOptimize(max_clique_order(g).order);
}
BENCHMARK(bm_max_clique)->Arg(12)->Arg(20);

void bm_compress_to_fixpoint(benchmark::State& state) {
    const Hypergraph g = random_graph(3, static_cast<int>(state.range(0)), 0.3, 4);
    for (auto _ : state) benchmark::DoNotOptimize(compress_to_fixpoint(g).edge_count());
}
BENCHMARK(bm_compress_to_fixpoint)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
