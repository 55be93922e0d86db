#include "nng/external_potential.hpp"

#include <cmath>

#include "nng/errors.hpp"

namespace nng {

ExternalPotential ExternalPotential::uniform_field(double slope) {
    ExternalPotential p;
    p.kind = Kind::uniform_field;
    p.slope = slope;
    return p;
}

ExternalPotential ExternalPotential::harmonic(double omega) {
    if (!(omega > 0.0)) throw ValidationError("harmonic omega must be positive");
    ExternalPotential p;
    p.kind = Kind::harmonic;
    p.omega = omega;
    return p;
}

ExternalPotential ExternalPotential::tabulated(std::vector<double> samples) {
    for (double v : samples) {
        if (!std::isfinite(v)) throw ValidationError("tabulated potential has non-finite samples");
    }
    ExternalPotential p;
    p.kind = Kind::tabulated;
    p.samples = std::move(samples);
    return p;
}

std::vector<double> ExternalPotential::on_grid(const Grid1D& grid, double mass) const {
    std::vector<double> v(grid.n(), 0.0);
    switch (kind) {
    case Kind::none:
        break;
    case Kind::uniform_field:
        for (std::size_t i = 0; i < grid.n(); ++i) v[i] = slope * grid.x(i);
        break;
    case Kind::harmonic:
        for (std::size_t i = 0; i < grid.n(); ++i) {
            v[i] = 0.5 * mass * omega * omega * grid.x(i) * grid.x(i);
        }
        break;
    case Kind::tabulated:
        if (samples.size() != grid.n()) {
            throw ValidationError("tabulated potential must cover the full grid");
        }
        v = samples;
        break;
    }
    return v;
}

} // namespace nng
