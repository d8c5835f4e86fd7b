#include <benchmark/benchmark.h>

#include "plab/energy.hpp"
#include "plab/limits.hpp"
#include "plab/measures.hpp"
#include "plab/networks.hpp"
#include "plab/process.hpp"
#include "plab/transport.hpp"

using namespace plab;

namespace {

void BM_AssignmentSolve(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto p = archimedean_path_marginal(0.0, m, 1);
    const auto q = archimedean_path_marginal(0.25, m, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(w2sq_pointsets(p, q));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AssignmentSolve)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_SampleRsn(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_rsn(n, seed++));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleRsn)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_EnsembleEnergy(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto pi = Partition::uniform(100);
    const auto e = archimedean_process(m, pi, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ensemble_energy(e, pi).total);
    }
}
BENCHMARK(BM_EnsembleEnergy)->Range(1000, 100000);

void BM_Discretize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto src = archimedean_process(n, Partition::uniform(n), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discretize(src, 3).process.t_max());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Discretize)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_SumDistanceSquared(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto p = sample_permuton(PermutonKind::archimedean, m, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sum_distance_squared(p));
    }
}
BENCHMARK(BM_SumDistanceSquared)->Range(1000, 100000);

} // namespace

BENCHMARK_MAIN();
