// bench_kernels.cpp — Serial vs OpenMP timings of the data-parallel kernels

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ftls/kernels.hpp"
#include "ftls/spectroscopy.hpp"
#include "ftls/thermo.hpp"

using namespace ftls;

namespace {

std::vector<double> grid(std::size_t n) {
    return uniform_grid(0.4, 1.3, n);
}

void lorentzian(benchmark::State& state, kernels::Exec exec) {
    const std::vector<kernels::LorentzianLine> lines = {{0.6997, 0.48, 0.2}, {0.85, 0.36, 0.5}, {1.0003, 0.48, 0.1}};
    const auto omega = grid(static_cast<std::size_t>(state.range(0)));
    std::vector<double> out(omega.size());
    for (auto _ : state) {
        kernels::lorentzian_sum(exec, lines, omega, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void transform(benchmark::State& state, kernels::Exec exec) {
    std::vector<cplx> f(12000);
    for (std::size_t k = 0; k < f.size(); ++k) {
        f[k] = std::exp(cplx(-0.3, -0.85) * (0.01 * static_cast<double>(k)));
    }
    const auto omega = grid(static_cast<std::size_t>(state.range(0)));
    std::vector<double> out(omega.size());
    for (auto _ : state) {
        kernels::damped_transform(exec, f, 0.01, omega, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void sweep(benchmark::State& state, kernels::Exec exec) {
    const BathSpec em{"em", Channel::Sigma1, 1.0, CubicDensity{1e-3}};
    const BathSpec deph{"dephasing", Channel::Sigma3, 1.0, FlatDensity{1.0}};
    std::vector<double> deltas(static_cast<std::size_t>(state.range(0)));
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        deltas[k] = -0.05 + 0.1 * static_cast<double>(k) / static_cast<double>(deltas.size() - 1);
    }
    for (auto _ : state) {
        auto pts = heatpump_sweep(20.0, 0.005, em, deph, deltas, 10.0, exec);
        benchmark::DoNotOptimize(pts.data());
    }
}

} // namespace

BENCHMARK_CAPTURE(lorentzian, serial, kernels::Exec::Serial)->Arg(2000)->Arg(200000);
BENCHMARK_CAPTURE(lorentzian, omp, kernels::Exec::Parallel)->Arg(2000)->Arg(200000);
BENCHMARK_CAPTURE(transform, serial, kernels::Exec::Serial)->Arg(2000);
BENCHMARK_CAPTURE(transform, omp, kernels::Exec::Parallel)->Arg(2000);
BENCHMARK_CAPTURE(sweep, serial, kernels::Exec::Serial)->Arg(201);
BENCHMARK_CAPTURE(sweep, omp, kernels::Exec::Parallel)->Arg(201);

BENCHMARK_MAIN();
