#pragma once

#include <vector>

#include "nng/field.hpp"
#include "nng/grid.hpp"

namespace nng {

/// Two-copy amplitude Psi(x, x~) on grid x grid.
class MetaState {
public:
    MetaState(Grid1D grid, ComplexField amplitudes, double time = 0.0);

    const Grid1D& grid() const { return grid_; }
    const ComplexField& amplitudes() const { return amplitudes_; }
    ComplexField& amplitudes() { return amplitudes_; }
    double time() const { return time_; }
    void set_time(double t) { time_ = t; }

    // Riemann sum of |Psi|^2 dx^2. Row partial sums are combined in a fixed
    // order, so the result does not depend on the worker count.
    double norm_squared() const;
    bool all_finite() const;
    // max |Psi(x, x~) - Psi(x~, x)|
    double exchange_asymmetry() const;

    void conjugate();

private:
    Grid1D grid_;
    ComplexField amplitudes_;
    double time_;
};

/// psi(x) ~ exp(-(x-c)^2 / (4 sigma^2) + i p x / hbar), so Var(x) = sigma^2.
struct GaussianPacket {
    double center = 0.0;
    double width = 1.0;
    double momentum = 0.0;
};

// Normalized single-copy superposition of packets (equal weights).
std::vector<cplx> packet_superposition(const Grid1D& grid, const std::vector<GaussianPacket>& packets,
                                       double hbar);

/// Product state psi(x) psi(x~) of one Gaussian packet shared by both copies.
MetaState gaussian_product_metastate(const Grid1D& grid, double center, double width,
                                     double momentum, double hbar = 1.0);

/// Product state psi(x) psi(x~) where psi is an equal-weight superposition of
/// the given packets. Both copies carry the same psi.
MetaState superposition_product_metastate(const Grid1D& grid,
                                          const std::vector<GaussianPacket>& packets,
                                          double hbar = 1.0);

// Fraction of |psi|^2 for a packet lying outside the central 80% of the grid.
double packet_tail_mass(const Grid1D& grid, const GaussianPacket& packet);

} // namespace nng
