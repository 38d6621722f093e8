#include <benchmark/benchmark.h>

#include <vector>

#include "rhzeta/evolution.hpp"
#include "rhzeta/synthesis.hpp"
#include "rhzeta/verification.hpp"
#include "rhzeta/zeta.hpp"

namespace {

rhz::SimulationParams params_for(benchmark::State& state) {
    return {static_cast<std::size_t>(state.range(0)), 0.5, 2.0, 1.0};
}

void BM_Synthesize(benchmark::State& state) {
    const rhz::SimulationParams p = params_for(state);
    for (auto _ : state) benchmark::DoNotOptimize(rhz::synthesize(p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Synthesize)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNCubed);

void BM_Lanczos(benchmark::State& state) {
    const rhz::SimulationParams p = params_for(state);
    const rhz::Spectrum e = rhz::log_spectrum(p);
    const rhz::AmplitudeVector c = rhz::riemann_amplitudes(p);
    for (auto _ : state) benchmark::DoNotOptimize(rhz::lanczos_synthesis(e, c));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Lanczos)->RangeMultiplier(2)->Range(4, 256)->Complexity(benchmark::oNCubed);

void BM_EighTridiagonal(benchmark::State& state) {
    const rhz::SymmetricTridiagonal h = rhz::synthesize(params_for(state));
    for (auto _ : state) benchmark::DoNotOptimize(rhz::eigh_tridiagonal(h));
}
BENCHMARK(BM_EighTridiagonal)->Arg(5)->Arg(50)->Arg(200);

void BM_EvolveSpectral(benchmark::State& state) {
    const rhz::SymmetricTridiagonal h = rhz::synthesize(params_for(state));
    const rhz::TimeGrid grid{0.0, 50.0, 2001, std::nullopt};
    for (auto _ : state) benchmark::DoNotOptimize(rhz::evolve_spectral(h, grid));
}
BENCHMARK(BM_EvolveSpectral)->Arg(5)->Arg(50);

void BM_EvolveOde(benchmark::State& state) {
    const rhz::SymmetricTridiagonal h = rhz::synthesize(params_for(state));
    const rhz::TimeGrid grid{0.0, 50.0, 2001, std::nullopt};
    for (auto _ : state) benchmark::DoNotOptimize(rhz::evolve_ode(h, grid));
}
BENCHMARK(BM_EvolveOde)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_HurwitzZeta(benchmark::State& state) {
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rhz::hurwitz_zeta({2.0, t}, 0.5));
}
BENCHMARK(BM_HurwitzZeta)->Arg(0)->Arg(50)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
