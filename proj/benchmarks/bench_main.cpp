#include <benchmark/benchmark.h>

#include "ryserlab/constructive.hpp"
#include "ryserlab/exact.hpp"
#include "ryserlab/generators.hpp"
#include "ryserlab/goodpart.hpp"
#include "ryserlab/hypercover.hpp"
#include "ryserlab/signatures.hpp"

using namespace ryser;

// Exact tc on random sparse colorings; the argument is the vertex count.
static void BM_TcExact(benchmark::State& state) {
    Rng rng(11);
    const int n = int(state.range(0));
    ColoredMultigraph g(n, 3);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(4) == 0) g.add_edge(u, v, 1 + int(rng.below(3)));
    for (auto _ : state) benchmark::DoNotOptimize(tc_exact(g).size);
}
BENCHMARK(BM_TcExact)->Arg(12)->Arg(20)->Arg(28);

static void BM_CoverComplete(benchmark::State& state) {
    Rng rng(12);
    const int n = int(state.range(0)), r = int(state.range(1));
    auto g = random_complete(n, r, rng);
    for (auto _ : state) benchmark::DoNotOptimize(cover_complete(g, r).size());
}
BENCHMARK(BM_CoverComplete)->Args({30, 2})->Args({60, 3})->Args({40, 4});

static void BM_CoverBipartite3(benchmark::State& state) {
    Rng rng(13);
    const int s = int(state.range(0));
    auto m = random_multipartite({s, s}, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(cover_bipartite3(m.g, m.parts[0], m.parts[1]).size());
}
BENCHMARK(BM_CoverBipartite3)->Arg(10)->Arg(20);

static void BM_SignatureCensus(benchmark::State& state) {
    const int n = int(state.range(0)), p = int(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(signature_census(n, p));
}
BENCHMARK(BM_SignatureCensus)->Args({5, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);

static void BM_ZExact(benchmark::State& state) {
    const int r = int(state.range(0)), d = int(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(z_exact(r, d).upper);
}
BENCHMARK(BM_ZExact)->Args({3, 3})->Args({3, 4})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_TightSpanning(benchmark::State& state) {
    Rng rng(14);
    auto h = random_complete_coloring(int(state.range(0)), 3, 3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(tight_spanning(h).has_value());
}
BENCHMARK(BM_TightSpanning)->Arg(7)->Arg(10);

BENCHMARK_MAIN();
