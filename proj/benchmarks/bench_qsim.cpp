#include <benchmark/benchmark.h>

#include "simphil/builders.hpp"
#include "simphil/ez.hpp"
#include "simphil/qsim.hpp"

using namespace simphil;

namespace {

SimplicialSet torus() {
    NondegenerateData cells(3);
    cells[0] = {{"v", {}}};
    cells[1] = {{"a", {"v", "v"}}, {"b", {"v", "v"}}, {"c", {"v", "v"}}};
    cells[2] = {{"U", {"b", "c", "a"}}, {"L", {"a", "c", "b"}}};
    return build_from_nondegenerate(cells, 3, Provenance{"explicit", "torus", {}, {}, {}});
}

}  // namespace

static void BM_Grover(benchmark::State& state) {
    const auto x = build_nerve_group(FiniteGroup::cyclic(3), 4);
    for (auto _ : state) benchmark::DoNotOptimize(grover_project(x, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Grover)->Arg(2)->Arg(4);

static void BM_QuantumCount(benchmark::State& state) {
    const auto x = build_nerve_group(FiniteGroup::cyclic(2), 3);
    for (auto _ : state) benchmark::DoNotOptimize(quantum_count(x, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuantumCount)->Arg(6)->Arg(9);

static void BM_QPEBettiPure(benchmark::State& state) {
    const auto x = torus();
    const QPEConfig cfg{static_cast<int>(state.range(0)), std::nullopt, 10000, 42};
    for (auto _ : state) benchmark::DoNotOptimize(qpe_betti(x, 1, cfg, DensityPath::pure_average));
}
BENCHMARK(BM_QPEBettiPure)->Arg(6)->Arg(8);

static void BM_QPEBettiDirect(benchmark::State& state) {
    const auto x = torus();
    const QPEConfig cfg{static_cast<int>(state.range(0)), std::nullopt, 10000, 42};
    for (auto _ : state) benchmark::DoNotOptimize(qpe_betti(x, 1, cfg, DensityPath::direct));
}
BENCHMARK(BM_QPEBettiDirect)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
