// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "nng/fft.hpp"
#include "nng/kernels.hpp"

using namespace nng;

namespace {

ComplexField random_field(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    ComplexField f(n);
    for (cplx& z : f.values()) z = {normal(rng), normal(rng)};
    return f;
}

ComplexField unit_phase(std::size_t n) {
    ComplexField p(n);
    const double w = 1.0 / static_cast<double>(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) p(a, b) = std::polar(w, 1e-3 * double(a * a + b * b));
    }
    return p;
}

void BM_kinetic_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    ComplexField psi = random_field(n, 1);
    const ComplexField phase = unit_phase(n);
    RowFft fft(n);
    for (auto _ : state) {
        kernels::serial::kinetic_step(psi, fft, phase);
        benchmark::DoNotOptimize(psi.data());
    }
}

void BM_kinetic_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    ComplexField psi = random_field(n, 1), scratch;
    const ComplexField phase = unit_phase(n);
    RowFft fft(n);
    for (auto _ : state) {
        kernels::kinetic_step(psi, scratch, fft, phase);
        benchmark::DoNotOptimize(psi.data());
    }
}

void BM_partial_trace_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexField psi = random_field(n, 2);
    ComplexField rho;
    for (auto _ : state) {
        kernels::serial::partial_trace(psi, 0.1, rho);
        benchmark::DoNotOptimize(rho.data());
    }
}

void BM_partial_trace_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexField psi = random_field(n, 2);
    ComplexField rho;
    for (auto _ : state) {
        kernels::partial_trace(psi, 0.1, rho);
        benchmark::DoNotOptimize(rho.data());
    }
}

void BM_multiply_serial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    ComplexField f = random_field(n, 3);
    const ComplexField phase = unit_phase(n);
    for (auto _ : state) {
        kernels::serial::multiply(f, phase);
        benchmark::DoNotOptimize(f.data());
    }
}

void BM_multiply_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    ComplexField f = random_field(n, 3);
    const ComplexField phase = unit_phase(n);
    for (auto _ : state) {
        kernels::multiply(f, phase);
        benchmark::DoNotOptimize(f.data());
    }
}

} // namespace

BENCHMARK(BM_kinetic_serial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kinetic_parallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partial_trace_serial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_partial_trace_parallel)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_serial)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_multiply_parallel)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
