#include <benchmark/benchmark.h>

#include "cdgsym/distribution.hpp"
#include "cdgsym/experiments.hpp"
#include "cdgsym/fourier.hpp"
#include "cdgsym/fourier_bound.hpp"
#include "cdgsym/process.hpp"

using namespace cdgsym;

static void BM_StepExact(benchmark::State& state) {
    Modulus mod(state.range(0));
    auto params = ProcessParams::trinary(mod);
    auto d = evolve_exact(params, 10).final_dist;  // warm, fully dense state
    for (auto _ : state) {
        d = step_exact(d, params);
        benchmark::DoNotOptimize(d.mass.data());
    }
    state.SetItemsProcessed(state.iterations() * mod.p);
}
BENCHMARK(BM_StepExact)->Arg(1009)->Arg(10007)->Arg(40009);

static void BM_PowerSpectrum(benchmark::State& state) {
    Modulus mod(state.range(0));
    auto d = evolve_exact(ProcessParams::trinary(mod), 20).final_dist;
    for (auto _ : state) {
        auto spec = power_spectrum(d);
        benchmark::DoNotOptimize(spec.data());
    }
    state.SetItemsProcessed(state.iterations() * mod.p * (mod.p / 2));
}
BENCHMARK(BM_PowerSpectrum)->Arg(101)->Arg(1009);

static void BM_SampleTrajectories(benchmark::State& state) {
    auto params = ProcessParams::trinary(Modulus(10007));
    const std::int64_t n = 1000;
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_trajectory(params, n, 1, i++).final_residue);
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleTrajectories);

static void BM_ConditionalUbBound(benchmark::State& state) {
    auto params = ProcessParams::trinary(Modulus(state.range(0)));
    auto seq = random_sequence(200, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(conditional_ub_bound(seq, params, 1));
    }
}
BENCHMARK(BM_ConditionalUbBound)->Arg(1009)->Arg(10007);

static void BM_MixingTime(benchmark::State& state) {
    auto params = ProcessParams::trinary(Modulus(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mixing_time(params, 0.25));
    }
}
BENCHMARK(BM_MixingTime)->Arg(1009)->Arg(10007)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
