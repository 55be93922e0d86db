#pragma once

#include <cstddef>
#include <vector>

namespace nng {

/// Uniform periodic grid with n points, spacing (x_max - x_min)/n. The last
/// point sits at x_max - dx; x_max itself is the periodic image of x_min.
class Grid1D {
public:
    Grid1D(double x_min, double x_max, std::size_t n);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t n() const { return n_; }
    double dx() const { return dx_; }
    double length() const { return x_max_ - x_min_; }

    double x(std::size_t i) const { return x_[i]; }
    const std::vector<double>& xs() const { return x_; }

    // Wavenumbers in FFT order: 0, dk, ..., (n/2-1)dk, -(n/2)dk, ..., -dk.
    double k(std::size_t i) const { return k_[i]; }
    const std::vector<double>& ks() const { return k_; }
    double dk() const;
    double k_max() const;

    bool operator==(const Grid1D& other) const;

private:
    double x_min_;
    double x_max_;
    std::size_t n_;
    double dx_;
    std::vector<double> x_;
    std::vector<double> k_;
};

Grid1D make_grid(double x_min, double x_max, std::size_t n);

} // namespace nng
