#pragma once

#include "nng/field.hpp"

namespace nng::kernels::detail {

// Plain complex product; avoids the NaN-recovery path of operator* and keeps
// the parallel and serial kernels on identical arithmetic.
inline cplx mul(cplx a, cplx b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

// sum_k a[k] conj(b[k]) in index order.
inline cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[k].real(), ai = a[k].imag();
        const double br = b[k].real(), bi = b[k].imag();
        re += ar * br + ai * bi;
        im += ai * br - ar * bi;
    }
    return {re, im};
}

inline double row_norm(const cplx* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
    return s;
}

} // namespace nng::kernels::detail
