#include <algorithm>
#include <cmath>
#include <cstddef>

#include "arith.hpp"
#include "nng/kernels.hpp"

namespace nng::kernels {

using detail::mul;

namespace {
constexpr std::ptrdiff_t kTile = 32;

std::ptrdiff_t signed_size(std::size_t s) { return static_cast<std::ptrdiff_t>(s); }
} // namespace

void multiply(ComplexField& f, const ComplexField& factor) {
    const std::ptrdiff_t total = signed_size(f.size());
    cplx* a = f.data();
    const cplx* b = factor.data();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) a[idx] = mul(a[idx], b[idx]);
}

void accumulate_product(ComplexField& acc, cplx scale, const ComplexField& factor,
                        const ComplexField& f) {
    const std::ptrdiff_t total = signed_size(acc.size());
    cplx* out = acc.data();
    const cplx* p = factor.data();
    const cplx* x = f.data();
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
        out[idx] += mul(scale, mul(p[idx], x[idx]));
    }
}

void transpose(const ComplexField& in, ComplexField& out) {
    const std::ptrdiff_t n = signed_size(in.n());
    if (out.n() != in.n()) out = ComplexField(in.n());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t ib = 0; ib < n; ib += kTile) {
        for (std::ptrdiff_t jb = 0; jb < n; jb += kTile) {
            const std::ptrdiff_t ie = std::min(ib + kTile, n);
            const std::ptrdiff_t je = std::min(jb + kTile, n);
            for (std::ptrdiff_t i = ib; i < ie; ++i) {
                for (std::ptrdiff_t j = jb; j < je; ++j) out(j, i) = in(i, j);
            }
        }
    }
}

void forward_rows(ComplexField& f, const RowFft& fft) {
    const std::ptrdiff_t n = signed_size(f.n());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fft.forward(f.row(i).data());
}

void backward_rows(ComplexField& f, const RowFft& fft) {
    const std::ptrdiff_t n = signed_size(f.n());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) fft.backward(f.row(i).data());
}

void kinetic_step(ComplexField& psi, ComplexField& scratch, const RowFft& fft,
                  const ComplexField& phase) {
    forward_rows(psi, fft);
    transpose(psi, scratch);
    forward_rows(scratch, fft);
    multiply(scratch, phase);
    backward_rows(scratch, fft);
    transpose(scratch, psi);
    backward_rows(psi, fft);
}

std::vector<double> row_norms(const ComplexField& f) {
    const std::ptrdiff_t n = signed_size(f.n());
    std::vector<double> rows(f.n());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = detail::row_norm(f.row(i).data(), f.n());
    return rows;
}

double norm_squared(const ComplexField& f, double weight) {
    double total = 0.0;
    for (double r : row_norms(f)) total += r;
    return total * weight;
}

double max_exchange_asymmetry(const ComplexField& f) {
    const std::ptrdiff_t n = signed_size(f.n());
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            worst = std::max(worst, std::abs(f(i, j) - f(j, i)));
        }
    }
    return worst;
}

void partial_trace(const ComplexField& psi, double weight, ComplexField& rho) {
    const std::size_t n = psi.n();
    if (rho.n() != n) rho = ComplexField(n);
    const std::ptrdiff_t sn = signed_size(n);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
        const cplx* a = psi.row(i).data();
        for (std::ptrdiff_t j = i; j < sn; ++j) {
            const cplx v = weight * detail::dot_conj(a, psi.row(j).data(), n);
            rho(i, j) = v;
            rho(j, i) = std::conj(v);
        }
    }
}

} // namespace nng::kernels
