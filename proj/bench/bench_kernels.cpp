// Serial reference kernels against the OpenMP ones, plus one full SSPRK2 step.
//
//   bench_kernels --benchmark_filter=Viscosity

#include <random>

#include <benchmark/benchmark.h>

#include "burgers/kernels.hpp"
#include "burgers/oracles.hpp"
#include "burgers/reference.hpp"
#include "burgers/time_integration.hpp"

using namespace burgers;

namespace {

NodalField smooth_state(std::size_t n) { return interpolate(smooth_default(), Mesh(n)); }

template <Backend B>
void BM_Viscosity(benchmark::State& state) {
    const auto u = smooth_state(static_cast<std::size_t>(state.range(0)));
    ViscositySpec spec;
    spec.u0_sup = u.max_abs();
    for (auto _ : state) benchmark::DoNotOptimize(compute_viscosity(u, spec, B));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Backend B>
void BM_Rhs(benchmark::State& state) {
    const auto u = smooth_state(static_cast<std::size_t>(state.range(0)));
    ViscositySpec spec;
    const auto nu = compute_viscosity(u, spec, Backend::Serial);
    for (auto _ : state) benchmark::DoNotOptimize(compute_rhs(u, nu, B));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <Backend B>
void BM_Step(benchmark::State& state) {
    const auto u = smooth_state(static_cast<std::size_t>(state.range(0)));
    ViscositySpec spec;
    spec.u0_sup = u.max_abs();
    const double dt = 0.1 * u.mesh().h();
    for (auto _ : state) benchmark::DoNotOptimize(step_ssprk2(u, spec, dt, B));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Viscosity<Backend::Serial>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_Viscosity<Backend::OpenMP>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_Rhs<Backend::Serial>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_Rhs<Backend::OpenMP>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_Step<Backend::Serial>)->RangeMultiplier(10)->Range(1000, 1000000);
BENCHMARK(BM_Step<Backend::OpenMP>)->RangeMultiplier(10)->Range(1000, 1000000);

BENCHMARK_MAIN();
