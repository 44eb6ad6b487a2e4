#include <benchmark/benchmark.h>

#include "simphil/builders.hpp"
#include "simphil/encoding.hpp"
#include "simphil/hilbert_ops.hpp"
#include "simphil/homology.hpp"

using namespace simphil;

static void BM_BuildNerveGroup(benchmark::State& state) {
    const FiniteGroup g = FiniteGroup::cyclic(static_cast<Index>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(build_nerve_group(g, 4));
}
BENCHMARK(BM_BuildNerveGroup)->Arg(2)->Arg(3)->Arg(5);

static void BM_Census(benchmark::State& state) {
    const auto x = build_nerve_group(FiniteGroup::symmetric(3), 4);
    for (auto _ : state) benchmark::DoNotOptimize(census(x));
}
BENCHMARK(BM_Census);

static void BM_BettiExactSphere(benchmark::State& state) {
    const auto x = build_from_complex(OrderedComplexTable::simplex_boundary(static_cast<Index>(state.range(0))), 4);
    for (auto _ : state) benchmark::DoNotOptimize(betti(x, 2, BettiMethod::exact_rank));
}
BENCHMARK(BM_BettiExactSphere)->Arg(3)->Arg(4);

static void BM_BettiHodgeSphere(benchmark::State& state) {
    const auto x = build_from_complex(OrderedComplexTable::simplex_boundary(static_cast<Index>(state.range(0))), 4);
    for (auto _ : state) benchmark::DoNotOptimize(betti(x, 2, BettiMethod::hodge));
}
BENCHMARK(BM_BettiHodgeSphere)->Arg(3)->Arg(4);

static void BM_BettiNormalizedSphere(benchmark::State& state) {
    const auto x = build_from_complex(OrderedComplexTable::simplex_boundary(static_cast<Index>(state.range(0))), 4);
    for (auto _ : state) benchmark::DoNotOptimize(betti(x, 2, BettiMethod::normalized_hodge));
}
BENCHMARK(BM_BettiNormalizedSphere)->Arg(3)->Arg(4);

static void BM_Perfectness(benchmark::State& state) {
    const auto x = build_nerve(FiniteCategoryTable::chain(3), 4);
    for (auto _ : state) benchmark::DoNotOptimize(perfectness_class(x, 2));
}
BENCHMARK(BM_Perfectness);

static void BM_VerifyNerveEncoding(benchmark::State& state) {
    const auto x = build_nerve_group(FiniteGroup::cyclic(3), 4);
    const EncodingTable t = nerve_register_encoding(x);
    for (auto _ : state) benchmark::DoNotOptimize(verify_encoding(x, t));
}
BENCHMARK(BM_VerifyNerveEncoding);

BENCHMARK_MAIN();
