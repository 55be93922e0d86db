#include "nng/meta_state.hpp"

#include <cmath>
#include <string>

#include "nng/errors.hpp"
#include "nng/kernels.hpp"

namespace nng {

MetaState::MetaState(Grid1D grid, ComplexField amplitudes, double time)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)), time_(time) {
    if (amplitudes_.n() != grid_.n()) {
        throw ValidationError("meta-state field size does not match the grid");
    }
    if (!all_finite()) throw ValidationError("meta-state has non-finite amplitudes");
}

double MetaState::norm_squared() const {
    return kernels::norm_squared(amplitudes_, grid_.dx() * grid_.dx());
}

bool MetaState::all_finite() const {
    for (const cplx& v : amplitudes_.values()) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

double MetaState::exchange_asymmetry() const { return kernels::max_exchange_asymmetry(amplitudes_); }

void MetaState::conjugate() {
    for (cplx& v : amplitudes_.values()) v = std::conj(v);
}

double packet_tail_mass(const Grid1D& grid, const GaussianPacket& packet) {
    const double margin = 0.1 * grid.length();
    const double lo = grid.x_min() + margin;
    const double hi = grid.x_max() - margin;
    const double s = packet.width * std::sqrt(2.0);
    return 0.5 * std::erfc((packet.center - lo) / s) + 0.5 * std::erfc((hi - packet.center) / s);
}

std::vector<cplx> packet_superposition(const Grid1D& grid, const std::vector<GaussianPacket>& packets,
                                       double hbar) {
    if (packets.empty()) throw ValidationError("at least one packet is required");
    if (!(hbar > 0.0)) throw ValidationError("hbar must be positive");
    for (const GaussianPacket& p : packets) {
        if (!(p.width > 2.0 * grid.dx())) {
            throw ValidationError("packet width " + std::to_string(p.width) +
                                  " is under-resolved; need width > 2 dx = " +
                                  std::to_string(2.0 * grid.dx()));
        }
        if (packet_tail_mass(grid, p) >= 1e-10) {
            throw ValidationError("packet at " + std::to_string(p.center) +
                                  " touches the grid boundary (tail mass outside central 80% >= 1e-10)");
        }
    }

    std::vector<cplx> psi(grid.n(), cplx{0.0, 0.0});
    for (const GaussianPacket& p : packets) {
        for (std::size_t i = 0; i < grid.n(); ++i) {
            const double d = grid.x(i) - p.center;
            const double envelope = std::exp(-d * d / (4.0 * p.width * p.width));
            psi[i] += envelope * std::polar(1.0, p.momentum * grid.x(i) / hbar);
        }
    }
    double norm = 0.0;
    for (const cplx& v : psi) norm += std::norm(v);
    const double scale = 1.0 / std::sqrt(norm * grid.dx());
    for (cplx& v : psi) v *= scale;
    return psi;
}

MetaState superposition_product_metastate(const Grid1D& grid,
                                          const std::vector<GaussianPacket>& packets, double hbar) {
    const std::vector<cplx> psi = packet_superposition(grid, packets, hbar);
    ComplexField field(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) {
        for (std::size_t j = 0; j < grid.n(); ++j) field(i, j) = psi[i] * psi[j];
    }
    return MetaState(grid, std::move(field), 0.0);
}

MetaState gaussian_product_metastate(const Grid1D& grid, double center, double width,
                                     double momentum, double hbar) {
    return superposition_product_metastate(grid, {GaussianPacket{center, width, momentum}}, hbar);
}

} // namespace nng
