#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nng/meta_state.hpp"
#include "nng/metaevolve.hpp"
#include "nng/units.hpp"

namespace nng::runner {

enum class ScenarioKind {
    potential_scan,
    free_check,
    two_packet_decoherence,
    perturbative_crosscheck,
    cow_sweep,
};

std::string_view to_string(ScenarioKind kind);
ScenarioKind scenario_from_string(std::string_view name);

/// Fully resolved scenario settings. Evolution scenarios work in
/// dimensionless units (hbar = m = 1, length unit = species radius unless
/// set otherwise); the COW sweep works in SI.
struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::free_check;
    UnitMode units = UnitMode::dimensionless;
    std::string output_dir;
    std::uint64_t seed = 0;   // reserved

    // Species and coupling. Either `coupling`/`radius` directly, or SI
    // species values plus a length unit from which they are derived.
    double coupling = 0.0;
    double radius = 1.0;
    std::optional<double> species_mass_si;
    std::optional<double> species_radius_si;
    std::optional<double> length_unit_si;

    // Evolution scenarios.
    double x_min = -40.0;
    double x_max = 40.0;
    std::size_t n = 512;
    EvolutionConfig evolution;
    GaussianPacket packet;
    double separation = 16.0;
    std::vector<double> scan_couplings;
    std::size_t scan_steps = 150;
    double target_action = 0.05;

    // Potential scan.
    double r_max = 10.0;
    std::size_t samples = 1001;

    // COW sweep (SI). The sweep runs over delta / hbar.
    std::string cow_preset = "neutron";
    double cow_mass = 1.675e-27;
    double cow_radius = 1e-15;
    double cow_L = 0.10;
    double cow_v = 2.2e3;
    double delta_start = 0.0;
    double delta_stop = 12.566370614359172;
    std::size_t delta_n = 1000;

    /// Dimensionless species radius and coupling actually used by the
    /// evolution scenarios.
    std::pair<double, double> resolved_coupling_and_radius() const;

    // Key-value pairs in the config grammar, sufficient to reproduce the run.
    std::vector<std::pair<std::string, std::string>> resolved() const;
};

ScenarioConfig default_config(ScenarioKind kind);

/// Parses the key-value grammar:
///
///   # comment
///   key = value
///
/// One assignment per line; blank lines and '#' comments are ignored; keys
/// are case-sensitive; lists are comma separated. `scenario` is required.
/// Unknown keys, keys that do not apply to the scenario, and duplicates are
/// errors. The result is validated with defaults filled in.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

// Throws ValidationError naming the offending key and constraint.
void validate(const ScenarioConfig& cfg);

std::string format_double(double value);

} // namespace nng::runner
