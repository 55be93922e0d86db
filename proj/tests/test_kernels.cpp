#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nng/fft.hpp"
#include "nng/grid.hpp"
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

ComplexField kinetic_phase(const Grid1D& g, double dt) {
    ComplexField phase(g.n());
    const double norm = 1.0 / static_cast<double>(g.n() * g.n());
    for (std::size_t a = 0; a < g.n(); ++a) {
        for (std::size_t b = 0; b < g.n(); ++b) {
            const double e = 0.5 * (g.k(a) * g.k(a) + g.k(b) * g.k(b));
            phase(a, b) = std::polar(norm, -e * dt);
        }
    }
    return phase;
}

const int kThreadCounts[] = {1, 2, 3, 4};

} // namespace

TEST_CASE("row FFT matches a direct DFT") {
    const std::size_t n = 16;
    RowFft fft(n);
    const ComplexField f = random_field(n, 1);
    std::vector<cplx> row(f.row(2).begin(), f.row(2).end());
    std::vector<cplx> direct(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            direct[k] += row[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(k * j) / double(n));
        }
    }
    fft.forward(row.data());
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(row[k] - direct[k]) < 1e-12);
    fft.backward(row.data());
    for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(row[j] / double(n) - f(2, j)) < 1e-14);
}

TEST_CASE("transpose") {
    const ComplexField f = random_field(64, 2);
    ComplexField t;
    kernels::transpose(f, t);
    for (std::size_t i = 0; i < 64; ++i) {
        for (std::size_t j = 0; j < 64; ++j) CHECK(t(i, j) == f(j, i));
    }
}

TEST_CASE("parallel kernels are bit-identical to the serial reference for any thread count") {
    const std::size_t n = 128;
    const Grid1D g(-10.0, 10.0, n);
    const ComplexField phase = kinetic_phase(g, 0.01);
    const ComplexField psi0 = random_field(n, 3);
    const ComplexField factor = random_field(n, 4);
    RowFft fft(n);

    ComplexField ref_kin = psi0;
    kernels::serial::kinetic_step(ref_kin, fft, phase);
    ComplexField ref_mul = psi0;
    kernels::serial::multiply(ref_mul, factor);
    ComplexField ref_acc = psi0;
    kernels::serial::accumulate_product(ref_acc, {0.0, -0.25}, factor, psi0);
    ComplexField ref_rho;
    kernels::serial::partial_trace(psi0, 0.5, ref_rho);
    const double ref_norm = kernels::serial::norm_squared(psi0, 0.5);

    const int saved = omp_get_max_threads();
    for (int threads : kThreadCounts) {
        CAPTURE(threads);
        omp_set_num_threads(threads);
        ComplexField kin = psi0, scratch;
        kernels::kinetic_step(kin, scratch, fft, phase);
        CHECK(kin == ref_kin);
        ComplexField mul = psi0;
        kernels::multiply(mul, factor);
        CHECK(mul == ref_mul);
        ComplexField acc = psi0;
        kernels::accumulate_product(acc, {0.0, -0.25}, factor, psi0);
        CHECK(acc == ref_acc);
        ComplexField rho;
        kernels::partial_trace(psi0, 0.5, rho);
        CHECK(rho == ref_rho);
        CHECK(kernels::norm_squared(psi0, 0.5) == ref_norm);
    }
    omp_set_num_threads(saved);
}

TEST_CASE("partial trace is exactly Hermitian and matches a direct contraction") {
    const ComplexField psi = random_field(32, 5);
    ComplexField rho;
    kernels::partial_trace(psi, 0.1, rho);
    for (std::size_t i = 0; i < 32; ++i) {
        for (std::size_t j = 0; j < 32; ++j) {
            CHECK(rho(i, j) == std::conj(rho(j, i)));
            cplx direct{};
            for (std::size_t k = 0; k < 32; ++k) direct += psi(i, k) * std::conj(psi(j, k));
            CHECK(std::abs(rho(i, j) - 0.1 * direct) < 1e-12);
        }
    }
}

TEST_CASE("kinetic step is unitary and exchange-symmetric") {
    const std::size_t n = 64;
    const Grid1D g(-10.0, 10.0, n);
    ComplexField psi(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            psi(i, j) = std::exp(-0.5 * (g.x(i) * g.x(i) + g.x(j) * g.x(j)) - 0.1 * g.x(i) * g.x(j));
        }
    }
    const double before = kernels::norm_squared(psi, 1.0);
    RowFft fft(n);
    ComplexField scratch;
    kernels::kinetic_step(psi, scratch, fft, kinetic_phase(g, 0.05));
    CHECK(std::abs(kernels::norm_squared(psi, 1.0) / before - 1.0) < 1e-13);
    CHECK(kernels::max_exchange_asymmetry(psi) < 1e-14);
}
