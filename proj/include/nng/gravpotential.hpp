#pragma once

#include <cstddef>
#include <vector>

#include "nng/grid.hpp"
#include "nng/units.hpp"

namespace nng {

/// Halved Newtonian potential between a homogeneous sphere and its hidden copy
/// at centre separation r:
///
///   r <  2R:  (G m^2 / 2) (80 R^3 r^2 - 30 R^2 r^3 + r^5 - 192 R^5) / (160 R^6)
///   r >= 2R: -(G m^2 / 2) / r
///
/// Both branches give -G m^2 / (4R) at r = 2R. The species is expressed in the
/// units of `units`, and G is taken from them.
class PairPotential {
public:
    PairPotential(ParticleSpecies species, UnitSystem units);

    const ParticleSpecies& species() const { return species_; }
    const UnitSystem& units() const { return units_; }
    double G() const { return units_.G; }
    double mass() const { return species_.mass; }
    double radius() const { return species_.radius; }

    double evaluate(double r) const;
    // The two branches, valid as formulas for any r > 0.
    double overlap_branch(double r) const;
    double newtonian_branch(double r) const;
    // V_G(0) = -(3/5) G m^2 / R
    double at_contact() const;

    /// Integral of V_G over [0, r], closed form on both branches.
    double antiderivative(double r) const;

private:
    ParticleSpecies species_;
    UnitSystem units_;
};

/// V_G(|x - x~|) tabulated over grid x grid, row-major (x, x~).
struct PairField {
    std::size_t n = 0;
    std::vector<double> values;

    double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

PairField evaluate_on_grid(const PairPotential& potential, const Grid1D& grid);

// -T V_G(0): both copies travel the same arm.
double action_coincident(const PairPotential& potential, double T);

/// -2 * integral_0^{T/2} V_G(sqrt(2) v t) dt: copies on different arms,
/// separating at sqrt(2) v and recombining symmetrically.
struct SeparatingAction {
    double closed_form = 0.0;
    double quadrature = 0.0;
    double quadrature_error = 0.0;
    int quadrature_intervals = 0;
    double relative_difference = 0.0;
};

double action_separating_closed_form(const PairPotential& potential, double v, double T);
double action_separating_quadrature(const PairPotential& potential, double v, double T,
                                    double* error_estimate = nullptr, int* intervals = nullptr);
SeparatingAction action_integral_separating(const PairPotential& potential, double v, double T);

} // namespace nng
