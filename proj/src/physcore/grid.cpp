#include "nng/grid.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "nng/errors.hpp"

namespace nng {

Grid1D::Grid1D(double x_min, double x_max, std::size_t n) : x_min_(x_min), x_max_(x_max), n_(n) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
        throw ValidationError("grid bounds must be finite with x_max > x_min");
    }
    if (n < 8 || !std::has_single_bit(n)) {
        throw ValidationError("grid n must be a power of two >= 8, got " + std::to_string(n));
    }
    dx_ = (x_max - x_min) / static_cast<double>(n);
    x_.resize(n);
    k_.resize(n);
    const double step_k = 2.0 * std::numbers::pi / (x_max - x_min);
    const auto half = static_cast<std::ptrdiff_t>(n / 2);
    for (std::size_t i = 0; i < n; ++i) {
        x_[i] = x_min + static_cast<double>(i) * dx_;
        auto m = static_cast<std::ptrdiff_t>(i);
        if (m >= half) m -= static_cast<std::ptrdiff_t>(n);
        k_[i] = static_cast<double>(m) * step_k;
    }
}

double Grid1D::dk() const { return 2.0 * std::numbers::pi / length(); }

double Grid1D::k_max() const { return std::numbers::pi / dx_; }

bool Grid1D::operator==(const Grid1D& other) const {
    return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_ == other.n_;
}

Grid1D make_grid(double x_min, double x_max, std::size_t n) { return Grid1D(x_min, x_max, n); }

} // namespace nng
