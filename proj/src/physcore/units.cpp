#include "nng/units.hpp"

#include <cmath>
#include <string>

#include "nng/errors.hpp"

namespace nng {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ValidationError(std::string(what) + " must be positive and finite, got " +
                              std::to_string(value));
    }
}

} // namespace

ParticleSpecies::ParticleSpecies(double mass, double radius) : mass(mass), radius(radius) {
    require_positive(mass, "species mass");
    require_positive(radius, "species radius");
}

UnitSystem UnitSystem::si() { return UnitSystem{}; }

UnitSystem UnitSystem::dimensionless(double coupling) {
    if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
        throw ValidationError("coupling must be non-negative and finite");
    }
    UnitSystem u;
    u.hbar = 1.0;
    u.G = coupling;
    u.mode = UnitMode::dimensionless;
    return u;
}

double UnitSystem::scale(Quantity q) const {
    const double L = length_unit;
    const double M = mass_unit;
    const double T = time_unit;
    switch (q) {
    case Quantity::length: return L;
    case Quantity::mass: return M;
    case Quantity::time: return T;
    case Quantity::energy: return M * L * L / (T * T);
    case Quantity::action: return M * L * L / T;
    case Quantity::velocity: return L / T;
    case Quantity::momentum: return M * L / T;
    }
    return 1.0;
}

void UnitSystem::validate() const {
    require_positive(hbar, "hbar");
    require_positive(length_unit, "length unit");
    require_positive(mass_unit, "mass unit");
    require_positive(time_unit, "time unit");
    if (!(G >= 0.0) || !std::isfinite(G)) {
        throw ValidationError("G must be non-negative and finite");
    }
}

UnitSystem to_dimensionless(const ParticleSpecies& species, const UnitSystem& units,
                            std::optional<double> length_unit) {
    if (units.mode != UnitMode::si) {
        throw ValidationError("to_dimensionless expects an SI unit system");
    }
    units.validate();
    const double ell = length_unit.value_or(species.radius);
    require_positive(ell, "length unit");

    const double m = species.mass;
    UnitSystem out;
    out.mode = UnitMode::dimensionless;
    out.hbar = 1.0;
    out.length_unit = ell;
    out.mass_unit = m;
    out.time_unit = m * ell * ell / units.hbar;
    out.G = units.G * m * m * m * ell / (units.hbar * units.hbar);
    return out;
}

ParticleSpecies express(const ParticleSpecies& species, const UnitSystem& from,
                        const UnitSystem& to) {
    const double mass = to.from_si(from.to_si(species.mass, Quantity::mass), Quantity::mass);
    const double radius =
        to.from_si(from.to_si(species.radius, Quantity::length), Quantity::length);
    return ParticleSpecies(mass, radius);
}

} // namespace nng
