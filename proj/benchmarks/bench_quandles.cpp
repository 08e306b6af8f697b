#include <benchmark/benchmark.h>

#include "quandles/constructions.hpp"
#include "quandles/enveloping.hpp"
#include "quandles/finite_group.hpp"
#include "quandles/quandle.hpp"

using namespace quandles;

static void BM_EnumerateQuandles(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_quandles(n));
}
BENCHMARK(BM_EnumerateQuandles)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Automorphisms(benchmark::State& state) {
    FiniteGroup q8 = quaternion_group();
    for (auto _ : state)
        benchmark::DoNotOptimize(automorphisms(q8));
}
BENCHMARK(BM_Automorphisms);

static void BM_FindHoms(benchmark::State& state) {
    FiniteQuandle d5 = alexander_quandle(cyclic_group(5), GroupAutomorphism{{0, 4, 3, 2, 1}}).quandle;
    for (auto _ : state)
        benchmark::DoNotOptimize(find_homs(d5, d5));
}
BENCHMARK(BM_FindHoms);

static void BM_FiniteWitness(benchmark::State& state) {
    FiniteGroup q8 = quaternion_group();
    GroupAutomorphism phi = automorphisms(q8)[1];
    for (auto _ : state)
        benchmark::DoNotOptimize(embed_into_finite_witness(q8, phi));
}
BENCHMARK(BM_FiniteWitness);

static void BM_SearchTrivial4(benchmark::State& state) {
    FiniteQuandle q = trivial_quandle(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(search_embedding(q));
}
BENCHMARK(BM_SearchTrivial4);

static void BM_ConjQuandleS4(benchmark::State& state) {
    FiniteGroup s4 = symmetric_group(4);
    for (auto _ : state)
        benchmark::DoNotOptimize(conj_quandle(s4));
}
BENCHMARK(BM_ConjQuandleS4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
