#pragma once

#include <cstddef>

#include "nng/field.hpp"

namespace nng {

/// In-place, unnormalized 1D FFT of fixed length backed by FFTW plans.
///
/// Plans are created with FFTW_ESTIMATE | FFTW_UNALIGNED, so the same codelets
/// run on every row regardless of buffer alignment and the transform of a
/// given row is bit-identical whichever thread executes it. Execution is
/// thread-safe; construction serializes on a global planner lock.
class RowFft {
public:
    explicit RowFft(std::size_t n);
    ~RowFft();
    RowFft(const RowFft&) = delete;
    RowFft& operator=(const RowFft&) = delete;
    RowFft(RowFft&& other) noexcept;
    RowFft& operator=(RowFft&& other) noexcept;

    std::size_t n() const { return n_; }
    void forward(cplx* data) const;
    void backward(cplx* data) const;

private:
    std::size_t n_ = 0;
    void* forward_plan_ = nullptr;
    void* backward_plan_ = nullptr;
};

} // namespace nng
