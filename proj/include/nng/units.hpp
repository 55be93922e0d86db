#pragma once

#include <optional>

namespace nng {

enum class UnitMode { si, dimensionless };

// Derived quantities the unit system converts between SI and working units.
enum class Quantity { length, mass, time, energy, action, velocity, momentum };

inline constexpr Quantity kAllQuantities[] = {
    Quantity::length, Quantity::energy,   Quantity::mass,    Quantity::time,
    Quantity::action, Quantity::velocity, Quantity::momentum};

namespace codata {
inline constexpr double hbar = 1.054571817e-34;   // J s
inline constexpr double G = 6.67430e-11;          // m^3 kg^-1 s^-2
inline constexpr double neutron_mass = 1.67492749804e-27;
} // namespace codata

// Homogeneous sphere. Values are expressed in whatever unit system the
// species travels with.
struct ParticleSpecies {
    double mass;
    double radius;

    ParticleSpecies(double mass, double radius);
};

/// A consistent set of units for hbar and G.
///
/// length_unit, mass_unit and time_unit give the SI size of one working unit
/// (all 1 in SI mode). In dimensionless mode hbar is 1, the reference species
/// has mass 1, and the field G holds the coupling g = G m^3 l / hbar^2.
struct UnitSystem {
    double hbar = codata::hbar;
    double G = codata::G;
    double length_unit = 1.0;
    double mass_unit = 1.0;
    double time_unit = 1.0;
    UnitMode mode = UnitMode::si;

    static UnitSystem si();
    // Abstract dimensionless system with a given coupling (no SI anchor).
    static UnitSystem dimensionless(double coupling);

    double coupling() const { return G; }

    // SI size of one working unit of `q`.
    double scale(Quantity q) const;
    double to_si(double value, Quantity q) const { return value * scale(q); }
    double from_si(double value, Quantity q) const { return value / scale(q); }

    void validate() const;
};

/// Dimensionless system anchored on `species` (given in SI): hbar = 1, the
/// species mass is the mass unit, the length unit defaults to the species
/// radius, and G becomes g = G m^3 l / hbar^2.
UnitSystem to_dimensionless(const ParticleSpecies& species, const UnitSystem& units,
                            std::optional<double> length_unit = std::nullopt);

// Re-express a species given in `from` units in `to` units.
ParticleSpecies express(const ParticleSpecies& species, const UnitSystem& from,
                        const UnitSystem& to);

} // namespace nng
