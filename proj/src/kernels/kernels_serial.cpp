#include <vector>

#include "arith.hpp"
#include "nng/kernels.hpp"

namespace nng::kernels::serial {

using detail::mul;

void multiply(ComplexField& f, const ComplexField& factor) {
    for (std::size_t idx = 0; idx < f.size(); ++idx) f.data()[idx] = mul(f.data()[idx], factor.data()[idx]);
}

void accumulate_product(ComplexField& acc, cplx scale, const ComplexField& factor,
                        const ComplexField& f) {
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
        acc.data()[idx] += mul(scale, mul(factor.data()[idx], f.data()[idx]));
    }
}

void kinetic_step(ComplexField& psi, const RowFft& fft, const ComplexField& phase) {
    const std::size_t n = psi.n();
    std::vector<cplx> column(n);
    auto columns = [&](auto&& transform) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < n; ++i) column[i] = psi(i, j);
            transform(column.data());
            for (std::size_t i = 0; i < n; ++i) psi(i, j) = column[i];
        }
    };

    for (std::size_t i = 0; i < n; ++i) fft.forward(psi.row(i).data());
    columns([&](cplx* c) { fft.forward(c); });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) psi(i, j) = mul(psi(i, j), phase(j, i));
    }
    columns([&](cplx* c) { fft.backward(c); });
    for (std::size_t i = 0; i < n; ++i) fft.backward(psi.row(i).data());
}

double norm_squared(const ComplexField& f, double weight) {
    double total = 0.0;
    for (std::size_t i = 0; i < f.n(); ++i) total += detail::row_norm(f.row(i).data(), f.n());
    return total * weight;
}

void partial_trace(const ComplexField& psi, double weight, ComplexField& rho) {
    const std::size_t n = psi.n();
    rho = ComplexField(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rho(i, j) = weight * detail::dot_conj(psi.row(i).data(), psi.row(j).data(), n);
        }
    }
}

} // namespace nng::kernels::serial
