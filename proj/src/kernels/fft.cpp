#include "nng/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <utility>
#include <vector>

namespace nng {

namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

fftw_complex* as_fftw(cplx* p) { return reinterpret_cast<fftw_complex*>(p); }

} // namespace

RowFft::RowFft(std::size_t n) : n_(n) {
    std::vector<cplx> buffer(n);
    const std::lock_guard<std::mutex> lock(planner_mutex());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int len = static_cast<int>(n);
    forward_plan_ = fftw_plan_dft_1d(len, as_fftw(buffer.data()), as_fftw(buffer.data()),
                                     FFTW_FORWARD, flags);
    backward_plan_ = fftw_plan_dft_1d(len, as_fftw(buffer.data()), as_fftw(buffer.data()),
                                      FFTW_BACKWARD, flags);
}

RowFft::~RowFft() {
    const std::lock_guard<std::mutex> lock(planner_mutex());
    if (forward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
    if (backward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(backward_plan_));
}

RowFft::RowFft(RowFft&& other) noexcept
    : n_(other.n_),
      forward_plan_(std::exchange(other.forward_plan_, nullptr)),
      backward_plan_(std::exchange(other.backward_plan_, nullptr)) {}

RowFft& RowFft::operator=(RowFft&& other) noexcept {
    std::swap(n_, other.n_);
    std::swap(forward_plan_, other.forward_plan_);
    std::swap(backward_plan_, other.backward_plan_);
    return *this;
}

void RowFft::forward(cplx* data) const {
    fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), as_fftw(data), as_fftw(data));
}

void RowFft::backward(cplx* data) const {
    fftw_execute_dft(static_cast<fftw_plan>(backward_plan_), as_fftw(data), as_fftw(data));
}

} // namespace nng
