#pragma once

#include <vector>

#include "nng/fft.hpp"
#include "nng/field.hpp"

// Data-parallel kernels behind the meta-evolution and the partial trace.
//
// Every kernel is a pointwise map, a batch of independent row transforms, or
// a contraction whose inner sums run in a fixed order. Reductions go through
// per-row partials combined serially. Results are therefore bit-identical for
// any OpenMP thread count, and identical to the serial:: reference versions.
namespace nng::kernels {

// f(i,j) *= factor(i,j)
void multiply(ComplexField& f, const ComplexField& factor);
// acc(i,j) += scale * factor(i,j) * f(i,j)
void accumulate_product(ComplexField& acc, cplx scale, const ComplexField& factor,
                        const ComplexField& f);
void transpose(const ComplexField& in, ComplexField& out);

void forward_rows(ComplexField& f, const RowFft& fft);
void backward_rows(ComplexField& f, const RowFft& fft);

/// exp(-i T dt / hbar) in the conjugate basis of both coordinates.
/// `phase` is indexed (k_x~, k_x) and already carries the 1/n^2 FFT
/// normalization; it must be symmetric. `scratch` is resized as needed.
void kinetic_step(ComplexField& psi, ComplexField& scratch, const RowFft& fft,
                  const ComplexField& phase);

// Sum over rows of sum_j |f(i,j)|^2, times weight.
double norm_squared(const ComplexField& f, double weight);
std::vector<double> row_norms(const ComplexField& f);
double max_exchange_asymmetry(const ComplexField& f);

/// rho(i,j) = weight * sum_k psi(i,k) conj(psi(j,k)). The upper triangle is
/// computed and mirrored, so rho is exactly Hermitian.
void partial_trace(const ComplexField& psi, double weight, ComplexField& rho);

// Serial reference implementations. Same contracts, single thread, no
// transposes: columns are gathered through a strided copy.
namespace serial {
void multiply(ComplexField& f, const ComplexField& factor);
void accumulate_product(ComplexField& acc, cplx scale, const ComplexField& factor,
                        const ComplexField& f);
void kinetic_step(ComplexField& psi, const RowFft& fft, const ComplexField& phase);
double norm_squared(const ComplexField& f, double weight);
void partial_trace(const ComplexField& psi, double weight, ComplexField& rho);
} // namespace serial

} // namespace nng::kernels
