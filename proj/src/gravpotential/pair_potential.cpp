#include <cmath>
#include <numbers>
#include <string>

#include "nng/errors.hpp"
#include "nng/gravpotential.hpp"
#include "nng/quadrature.hpp"

namespace nng {

PairPotential::PairPotential(ParticleSpecies species, UnitSystem units)
    : species_(species), units_(units) {
    units_.validate();
}

double PairPotential::evaluate(double r) const {
    if (!(r >= 0.0)) throw ValidationError("pair separation must be non-negative, got " + std::to_string(r));
    return r < 2.0 * species_.radius ? overlap_branch(r) : newtonian_branch(r);
}

double PairPotential::overlap_branch(double r) const {
    const double R = species_.radius;
    const double gm2 = units_.G * species_.mass * species_.mass;
    const double R2 = R * R;
    const double R3 = R2 * R;
    const double R5 = R3 * R2;
    const double R6 = R3 * R3;
    const double r2 = r * r;
    const double r3 = r2 * r;
    const double r5 = r3 * r2;
    return 0.5 * gm2 * (80.0 * R3 * r2 - 30.0 * R2 * r3 + r5 - 192.0 * R5) / (160.0 * R6);
}

double PairPotential::newtonian_branch(double r) const {
    return -0.5 * units_.G * species_.mass * species_.mass / r;
}

double PairPotential::at_contact() const {
    return -0.6 * units_.G * species_.mass * species_.mass / species_.radius;
}

double PairPotential::antiderivative(double r) const {
    if (!(r >= 0.0)) throw ValidationError("pair separation must be non-negative");
    const double R = species_.radius;
    const double gm2 = units_.G * species_.mass * species_.mass;
    if (r <= 2.0 * R) {
        // Dimensionless s = r / R keeps the polynomial well scaled.
        const double s = r / R;
        const double s3 = s * s * s;
        const double poly = 80.0 / 3.0 * s3 - 7.5 * s3 * s + s3 * s3 / 6.0 - 192.0 * s;
        return gm2 * poly / 320.0;
    }
    // The inner branch integrates to -7/8 G m^2 over [0, 2R].
    return -0.875 * gm2 - 0.5 * gm2 * std::log(r / (2.0 * R));
}

PairField evaluate_on_grid(const PairPotential& potential, const Grid1D& grid) {
    PairField field;
    field.n = grid.n();
    field.values.resize(grid.n() * grid.n());
    const auto n = static_cast<std::ptrdiff_t>(grid.n());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            field.values[i * n + j] = potential.evaluate(std::abs(grid.x(i) - grid.x(j)));
        }
    }
    return field;
}

namespace {
void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(std::string(what) + " must be positive, got " + std::to_string(v));
    }
}
} // namespace

double action_coincident(const PairPotential& potential, double T) {
    require_positive(T, "flight time T");
    return -T * potential.at_contact();
}

double action_separating_closed_form(const PairPotential& potential, double v, double T) {
    require_positive(v, "beam speed v");
    require_positive(T, "flight time T");
    const double rate = std::numbers::sqrt2 * v;
    return -2.0 * potential.antiderivative(rate * 0.5 * T) / rate;
}

double action_separating_quadrature(const PairPotential& potential, double v, double T,
                                    double* error_estimate, int* intervals) {
    require_positive(v, "beam speed v");
    require_positive(T, "flight time T");
    if (potential.G() == 0.0) {
        if (error_estimate) *error_estimate = 0.0;
        if (intervals) *intervals = 0;
        return 0.0;
    }
    const double rate = std::numbers::sqrt2 * v;
    const double t_end = 0.5 * T;
    const double t_contact = 2.0 * potential.radius() / rate;
    auto integrand = [&](double t) { return potential.evaluate(rate * t); };

    // Absolute floor at 1e-15 of |V_G(0)| times the overlap time; the
    // relative target dominates for any nonzero result.
    const double scale = std::abs(potential.at_contact()) * std::min(t_end, t_contact);
    const double abs_tol = 1e-15 * scale;
    const double rel_tol = 1e-13;

    QuadratureResult total;
    if (t_end <= t_contact) {
        total = integrate_adaptive(integrand, 0.0, t_end, abs_tol, rel_tol);
    } else {
        const QuadratureResult inner = integrate_adaptive(integrand, 0.0, t_contact, abs_tol, rel_tol);
        const QuadratureResult outer = integrate_adaptive(integrand, t_contact, t_end, abs_tol, rel_tol);
        total.value = inner.value + outer.value;
        total.error = inner.error + outer.error;
        total.intervals = inner.intervals + outer.intervals;
    }
    if (error_estimate) *error_estimate = 2.0 * total.error;
    if (intervals) *intervals = total.intervals;
    return -2.0 * total.value;
}

SeparatingAction action_integral_separating(const PairPotential& potential, double v, double T) {
    SeparatingAction out;
    out.closed_form = action_separating_closed_form(potential, v, T);
    out.quadrature = action_separating_quadrature(potential, v, T, &out.quadrature_error,
                                                  &out.quadrature_intervals);
    const double denom = std::max(std::abs(out.closed_form), std::abs(out.quadrature));
    out.relative_difference = denom > 0.0 ? std::abs(out.closed_form - out.quadrature) / denom : 0.0;
    return out;
}

} // namespace nng
