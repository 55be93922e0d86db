#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nng {

using cplx = std::complex<double>;

/// Dense n x n complex field, row-major. Row index is the physical coordinate
/// x, column index the hidden coordinate x~.
class ComplexField {
public:
    ComplexField() = default;
    explicit ComplexField(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t n() const { return n_; }
    std::size_t size() const { return data_.size(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<cplx> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
    std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    std::span<cplx> values() { return data_; }
    std::span<const cplx> values() const { return data_; }

    bool operator==(const ComplexField&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<cplx> data_;
};

} // namespace nng
