#include <cmath>
#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "oscidyn/oscidyn.hpp"

using namespace oscidyn;

namespace {

ModelParams damped(int l) {
    ModelParams m;
    m.l = l;
    m.Gamma = 0.3;
    m.n_d = 0.5;
    m.N = 1e4;
    return m;
}

void BM_classical_state(benchmark::State& state) {
    const ModelParams m = damped(static_cast<int>(state.range(0)));
    double tau = 0.5;
    for (auto _ : state) {
        tau += 1e-9;
        benchmark::DoNotOptimize(classical_state(m, {0.9, 0.1}, tau));
    }
}
BENCHMARK(BM_classical_state)->Arg(1)->Arg(5);

void BM_closed_cumulants(benchmark::State& state) {
    const ModelParams m = damped(static_cast<int>(state.range(0)));
    double tau = 0.5;
    for (auto _ : state) {
        tau += 1e-9;
        benchmark::DoNotOptimize(cumulants_closed(m, {0.9, 0.1}, tau));
    }
}
BENCHMARK(BM_closed_cumulants)->Arg(1)->Arg(5);

void BM_quantum_correction(benchmark::State& state) {
    const ModelParams m = damped(static_cast<int>(state.range(0)));
    const cplx z{0.8, 0.1};
    const cplx C{0.1, 0.2};
    for (auto _ : state) benchmark::DoNotOptimize(quantum_correction(m, z, C, 0.8));
}
BENCHMARK(BM_quantum_correction)->Arg(1)->Arg(5);

void BM_integrate_ode(benchmark::State& state) {
    const ModelParams m = damped(2);
    IntegrateOptions opts;
    opts.dt = 1e-3;
    opts.self_check = false;
    opts.include_q = state.range(0) != 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_semiclassical(m, {1.0, 0.0}, 1.0, opts));
}
BENCHMARK(BM_integrate_ode)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_shift_kernel(benchmark::State& state) {
    const std::size_t n = 10001;
    std::vector<double> grid(n);
    std::vector<cplx> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        grid[k] = 1e-3 * static_cast<double>(k);
        values[k] = std::exp(cplx(0.0, 0.37 * grid[k])) * (1.0 + grid[k] * grid[k]);
    }
    for (auto _ : state) benchmark::DoNotOptimize(kernel_trapezoid(values, grid, 0.25));
}
BENCHMARK(BM_shift_kernel)->Unit(benchmark::kMicrosecond);

void BM_fock_lossless(benchmark::State& state) {
    PhysicalParams p;
    p.l = 1;
    p.lambda = 0.01;
    p.N = 100;
    p.Delta = 0.2;
    for (auto _ : state)
        benchmark::DoNotOptimize(fock_evolve_lossless(p, {8.0, 0.0}, 1.0, 128));
}
BENCHMARK(BM_fock_lossless)->Unit(benchmark::kMicrosecond);

void BM_lindblad_steps(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    PhysicalParams p;
    p.l = 1;
    p.lambda = 0.01;
    p.N = 25;
    p.gamma = 0.5;
    p.n_d = 0.5;
    for (auto _ : state)
        benchmark::DoNotOptimize(lindblad_evolve(p, {4.0, 0.0}, 0.01, 1e-3, n_max, 1));
}
BENCHMARK(BM_lindblad_steps)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
