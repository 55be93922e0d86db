#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "nng/errors.hpp"
#include "nng/kernels.hpp"
#include "nng/metaevolve.hpp"

namespace nng {

void EvolutionConfig::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("evolve.dt must be positive");
    if (steps < 1) throw ValidationError("evolve.steps must be >= 1");
    if (boundary == Boundary::absorbing) {
        if (!(mask_width > 0.0 && mask_width < 0.25)) {
            throw ValidationError("evolve.mask_width must lie in (0, 0.25)");
        }
        if (!(mask_strength >= 0.0)) throw ValidationError("evolve.mask_strength must be >= 0");
    }
    if (!(d_cut > 0.0)) throw ValidationError("d_cut must be positive");
}

double cfl_number(const Grid1D& grid, double hbar, double mass, double dt) {
    const double k = grid.k_max();
    return dt * hbar * k * k / (2.0 * mass);
}

double cfl_dt_bound(const Grid1D& grid, double hbar, double mass) {
    return kCflLimit / cfl_number(grid, hbar, mass, 1.0);
}

namespace {

ComplexField kinetic_phase(const Grid1D& grid, double hbar, double mass, double dt) {
    const std::size_t n = grid.n();
    const double norm = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    ComplexField phase(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const double k2 = grid.k(a) * grid.k(a) + grid.k(b) * grid.k(b);
            phase(a, b) = std::polar(norm, -hbar * k2 * dt / (2.0 * mass));
        }
    }
    return phase;
}

std::vector<double> absorbing_rate(const Grid1D& grid, const EvolutionConfig& cfg) {
    std::vector<double> gamma(grid.n(), 0.0);
    if (cfg.boundary != Boundary::absorbing) return gamma;
    const double w = cfg.mask_width * grid.length();
    for (std::size_t i = 0; i < grid.n(); ++i) {
        const double s = std::min(grid.x(i) - grid.x_min(), grid.x_max() - grid.x(i));
        if (s < w) {
            const double c = std::cos(0.5 * std::numbers::pi * s / w);
            gamma[i] = cfg.mask_strength * c * c;
        }
    }
    return gamma;
}

} // namespace

MetaPropagator::MetaPropagator(const Grid1D& grid, const ExternalPotential& external,
                               const PairPotential& pair, const EvolutionConfig& cfg,
                               bool include_pair)
    : fft_(grid.n()) {
    const double hbar = pair.units().hbar;
    const double mass = pair.mass();
    const std::size_t n = grid.n();
    const std::vector<double> v_ext = external.on_grid(grid, mass);
    const std::vector<double> gamma = absorbing_rate(grid, cfg);
    const PairField v_pair = evaluate_on_grid(pair, grid);

    potential_half_ = ComplexField(n);
    pair_values_ = ComplexField(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double v = v_ext[i] + v_ext[j];
            if (include_pair) v += v_pair(i, j);
            const double damping = std::exp(-0.5 * (gamma[i] + gamma[j]) * cfg.dt);
            potential_half_(i, j) = std::polar(damping, -v * cfg.dt / (2.0 * hbar));
            pair_values_(i, j) = v_pair(i, j);
        }
    }
    kinetic_full_ = kinetic_phase(grid, hbar, mass, cfg.dt);
    kinetic_half_ = kinetic_phase(grid, hbar, mass, 0.5 * cfg.dt);
    scratch_ = ComplexField(n);
}

void MetaPropagator::step(ComplexField& psi) {
    kernels::multiply(psi, potential_half_);
    kernels::kinetic_step(psi, scratch_, fft_, kinetic_full_);
    kernels::multiply(psi, potential_half_);
}

void MetaPropagator::half_kinetic(ComplexField& psi) {
    kernels::kinetic_step(psi, scratch_, fft_, kinetic_half_);
}

namespace {

SnapshotSummary observe(const MetaState& state, double norm, const EvolutionConfig& cfg) {
    SnapshotSummary s;
    s.time = state.time();
    s.norm = norm;
    s.exchange_asymmetry = state.exchange_asymmetry();
    const double tolerance =
        cfg.boundary == Boundary::periodic ? kNormTolerance : std::numeric_limits<double>::infinity();
    const ReducedDensityMatrix rho = partial_trace(state, tolerance);
    s.trace = rho.trace();
    s.hermiticity = rho.hermiticity_defect();
    s.report = decoherence_report(rho, cfg.d_cut);
    return s;
}

} // namespace

EvolutionRecord evolve(MetaState state, const ExternalPotential& external, const PairPotential& pair,
                       const EvolutionConfig& cfg) {
    cfg.validate();
    const Grid1D& grid = state.grid();
    const double hbar = pair.units().hbar;
    const double cfl = cfl_number(grid, hbar, pair.mass(), cfg.dt);
    if (!(cfl < kCflLimit)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "CFL violation: dt * E_kin_max / hbar = " << cfl << " >= pi/4; need dt < "
            << cfl_dt_bound(grid, hbar, pair.mass());
        throw NumericalError(msg.str());
    }

    MetaPropagator propagator(grid, external, pair, cfg);
    EvolutionRecord record;
    double norm = state.norm_squared();

    auto record_point = [&]() {
        record.times.push_back(state.time());
        record.norms.push_back(norm);
        if (cfg.observe) record.observables.push_back(observe(state, norm, cfg));
        if (cfg.keep_snapshots) record.snapshots.push_back(state);
    };
    record_point();

    const double t0 = state.time();
    for (std::size_t k = 1; k <= cfg.steps; ++k) {
        propagator.step(state.amplitudes());
        state.set_time(t0 + static_cast<double>(k) * cfg.dt);
        const double next = state.norm_squared();
        if (!std::isfinite(next)) {
            throw NumericalError("non-finite amplitudes after step " + std::to_string(k) +
                                 " (t = " + std::to_string(state.time()) + ")");
        }
        record.max_step_norm_drift = std::max(record.max_step_norm_drift, std::abs(next - norm));
        record.max_step_norm_increase = std::max(record.max_step_norm_increase, next - norm);
        norm = next;
        const bool last = k == cfg.steps;
        if (last || (cfg.record_every > 0 && k % cfg.record_every == 0)) record_point();
    }
    record.final_state = std::move(state);
    return record;
}

} // namespace nng
