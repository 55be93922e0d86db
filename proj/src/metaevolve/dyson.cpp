#include <cmath>
#include <sstream>

#include "nng/errors.hpp"
#include "nng/kernels.hpp"
#include "nng/metaevolve.hpp"

namespace nng {

double pair_action_estimate(const PairPotential& pair, const EvolutionConfig& cfg) {
    return std::abs(pair.at_contact()) * static_cast<double>(cfg.steps) * cfg.dt / pair.units().hbar;
}

DysonTerms dyson_first_order(const MetaState& state0, const ExternalPotential& external,
                             const PairPotential& pair, const EvolutionConfig& cfg) {
    cfg.validate();
    const double estimate = pair_action_estimate(pair, cfg);
    if (!(estimate < kDysonActionLimit)) {
        std::ostringstream msg;
        msg << "coupling too large for first-order Dyson: |V_G(0)| steps dt / hbar = " << estimate
            << " >= " << kDysonActionLimit;
        throw ValidationError(msg.str());
    }
    const Grid1D& grid = state0.grid();
    const double hbar = pair.units().hbar;
    if (!(cfl_number(grid, hbar, pair.mass(), cfg.dt) < kCflLimit)) {
        throw NumericalError("CFL violation in Dyson run");
    }

    MetaPropagator u0(grid, external, pair, cfg, /*include_pair=*/false);
    const ComplexField& p0 = u0.potential_half_phase();
    // U0(dt) = B A with A = K(dt/2) P0 and B = P0 K(dt/2); the midpoint of
    // step k sits between the two factors.
    auto first_half = [&](ComplexField& f) {
        kernels::multiply(f, p0);
        u0.half_kinetic(f);
    };
    auto second_half = [&](ComplexField& f) {
        u0.half_kinetic(f);
        kernels::multiply(f, p0);
    };

    MetaState psi0 = state0;
    MetaState psi1(grid, ComplexField(grid.n()), state0.time());
    const cplx source_scale{0.0, -cfg.dt / hbar};
    const double t0 = state0.time();

    for (std::size_t k = 1; k <= cfg.steps; ++k) {
        first_half(psi0.amplitudes());
        first_half(psi1.amplitudes());
        kernels::accumulate_product(psi1.amplitudes(), source_scale, u0.pair_potential(),
                                    psi0.amplitudes());
        second_half(psi0.amplitudes());
        second_half(psi1.amplitudes());
        if (!std::isfinite(kernels::norm_squared(psi1.amplitudes(), 1.0) +
                           kernels::norm_squared(psi0.amplitudes(), 1.0))) {
            throw NumericalError("non-finite Dyson amplitudes after step " + std::to_string(k));
        }
        const double t = t0 + static_cast<double>(k) * cfg.dt;
        psi0.set_time(t);
        psi1.set_time(t);
    }
    return {std::move(psi0), std::move(psi1)};
}

} // namespace nng
