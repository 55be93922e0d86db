#include "nng/runner/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nng/errors.hpp"
#include "nng/grid.hpp"

namespace nng::runner {

namespace {

constexpr ScenarioKind kAll[] = {ScenarioKind::potential_scan, ScenarioKind::free_check,
                                 ScenarioKind::two_packet_decoherence,
                                 ScenarioKind::perturbative_crosscheck, ScenarioKind::cow_sweep};

// Time for a width-1 packet to double its width: 2 sqrt(3) m sigma^2 / hbar.
constexpr double kDoublingTime = 3.4641016151377544;

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
        throw ValidationError("config key '" + key + "': expected a finite number, got '" + value + "'");
    }
    return out;
}

std::size_t parse_count(const std::string& key, const std::string& value) {
    std::size_t out = 0;
    const char* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ValidationError("config key '" + key + "': expected a non-negative integer, got '" + value + "'");
    }
    return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    return out;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += format_double(values[i]);
    }
    return out;
}

struct KeySpec {
    std::set<ScenarioKind> scenarios;
    std::function<void(ScenarioConfig&, const std::string&, const std::string&)> set;
    std::function<std::string(const ScenarioConfig&)> get;
    // Emitted in resolved() only when this returns true.
    std::function<bool(const ScenarioConfig&)> present = [](const ScenarioConfig&) { return true; };
};

const std::set<ScenarioKind> kEvolution = {ScenarioKind::free_check, ScenarioKind::two_packet_decoherence,
                                           ScenarioKind::perturbative_crosscheck};

std::set<ScenarioKind> with(std::set<ScenarioKind> base, std::initializer_list<ScenarioKind> more) {
    base.insert(more.begin(), more.end());
    return base;
}

KeySpec number(std::set<ScenarioKind> scen, double ScenarioConfig::*field) {
    return {std::move(scen),
            [field](ScenarioConfig& c, const std::string& k, const std::string& v) { c.*field = parse_double(k, v); },
            [field](const ScenarioConfig& c) { return format_double(c.*field); }};
}

KeySpec evolution_number(double EvolutionConfig::*field) {
    return {kEvolution,
            [field](ScenarioConfig& c, const std::string& k, const std::string& v) {
                c.evolution.*field = parse_double(k, v);
            },
            [field](const ScenarioConfig& c) { return format_double(c.evolution.*field); }};
}

KeySpec count(std::set<ScenarioKind> scen, std::size_t ScenarioConfig::*field) {
    return {std::move(scen),
            [field](ScenarioConfig& c, const std::string& k, const std::string& v) { c.*field = parse_count(k, v); },
            [field](const ScenarioConfig& c) { return std::to_string(c.*field); }};
}

KeySpec optional_si(std::optional<double> ScenarioConfig::*field) {
    KeySpec spec{with(kEvolution, {ScenarioKind::potential_scan}),
                 [field](ScenarioConfig& c, const std::string& k, const std::string& v) { c.*field = parse_double(k, v); },
                 [field](const ScenarioConfig& c) { return format_double((c.*field).value_or(0.0)); }};
    spec.present = [field](const ScenarioConfig& c) { return (c.*field).has_value(); };
    return spec;
}

const std::map<std::string, KeySpec>& key_table() {
    static const std::map<std::string, KeySpec> table = [] {
        std::map<std::string, KeySpec> t;
        const std::set<ScenarioKind> all(std::begin(kAll), std::end(kAll));
        const std::set<ScenarioKind> two_packet = {ScenarioKind::two_packet_decoherence};
        const std::set<ScenarioKind> cow = {ScenarioKind::cow_sweep};
        const std::set<ScenarioKind> scan = {ScenarioKind::potential_scan};

        t["units"] = {{ScenarioKind::potential_scan},
                      [](ScenarioConfig& c, const std::string& k, const std::string& v) {
                          if (v == "si") c.units = UnitMode::si;
                          else if (v == "dimensionless") c.units = UnitMode::dimensionless;
                          else throw ValidationError("config key '" + k + "': expected si or dimensionless");
                      },
                      [](const ScenarioConfig& c) {
                          return std::string(c.units == UnitMode::si ? "si" : "dimensionless");
                      }};
        t["output_dir"] = {all,
                           [](ScenarioConfig& c, const std::string&, const std::string& v) { c.output_dir = v; },
                           [](const ScenarioConfig& c) { return c.output_dir; }};
        t["output_dir"].present = [](const ScenarioConfig& c) { return !c.output_dir.empty(); };
        t["seed"] = {all,
                     [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.seed = parse_count(k, v); },
                     [](const ScenarioConfig& c) { return std::to_string(c.seed); }};

        t["coupling"] = number({ScenarioKind::two_packet_decoherence, ScenarioKind::potential_scan},
                               &ScenarioConfig::coupling);
        t["radius"] = number(with(kEvolution, {ScenarioKind::potential_scan}), &ScenarioConfig::radius);
        t["species.mass"] = optional_si(&ScenarioConfig::species_mass_si);
        t["species.radius"] = optional_si(&ScenarioConfig::species_radius_si);
        t["length_unit"] = optional_si(&ScenarioConfig::length_unit_si);

        t["grid.x_min"] = number(kEvolution, &ScenarioConfig::x_min);
        t["grid.x_max"] = number(kEvolution, &ScenarioConfig::x_max);
        t["grid.n"] = count(kEvolution, &ScenarioConfig::n);

        t["evolve.dt"] = evolution_number(&EvolutionConfig::dt);
        t["evolve.mask_width"] = evolution_number(&EvolutionConfig::mask_width);
        t["evolve.mask_strength"] = evolution_number(&EvolutionConfig::mask_strength);
        t["d_cut"] = evolution_number(&EvolutionConfig::d_cut);
        t["evolve.steps"] = {kEvolution,
                             [](ScenarioConfig& c, const std::string& k, const std::string& v) {
                                 c.evolution.steps = parse_count(k, v);
                             },
                             [](const ScenarioConfig& c) { return std::to_string(c.evolution.steps); }};
        t["evolve.record_every"] = {kEvolution,
                                    [](ScenarioConfig& c, const std::string& k, const std::string& v) {
                                        c.evolution.record_every = parse_count(k, v);
                                    },
                                    [](const ScenarioConfig& c) { return std::to_string(c.evolution.record_every); }};
        t["evolve.boundary"] = {kEvolution,
                                [](ScenarioConfig& c, const std::string& k, const std::string& v) {
                                    if (v == "periodic") c.evolution.boundary = Boundary::periodic;
                                    else if (v == "absorbing") c.evolution.boundary = Boundary::absorbing;
                                    else throw ValidationError("config key '" + k + "': expected periodic or absorbing");
                                },
                                [](const ScenarioConfig& c) {
                                    return std::string(c.evolution.boundary == Boundary::periodic ? "periodic"
                                                                                                  : "absorbing");
                                }};

        auto packet = [](double GaussianPacket::*field) {
            return KeySpec{kEvolution,
                           [field](ScenarioConfig& c, const std::string& k, const std::string& v) {
                               c.packet.*field = parse_double(k, v);
                           },
                           [field](const ScenarioConfig& c) { return format_double(c.packet.*field); }};
        };
        t["packet.center"] = packet(&GaussianPacket::center);
        t["packet.width"] = packet(&GaussianPacket::width);
        t["packet.momentum"] = packet(&GaussianPacket::momentum);
        t["packet.separation"] = number(two_packet, &ScenarioConfig::separation);
        t["scan.couplings"] = {two_packet,
                               [](ScenarioConfig& c, const std::string& k, const std::string& v) {
                                   c.scan_couplings = parse_list(k, v);
                               },
                               [](const ScenarioConfig& c) { return join(c.scan_couplings); }};
        t["scan.steps"] = count(two_packet, &ScenarioConfig::scan_steps);
        t["perturbative.target_action"] = number({ScenarioKind::perturbative_crosscheck},
                                                 &ScenarioConfig::target_action);

        t["potential.r_max"] = number(scan, &ScenarioConfig::r_max);
        t["potential.samples"] = count(scan, &ScenarioConfig::samples);

        t["cow.preset"] = {cow,
                           [](ScenarioConfig& c, const std::string& k, const std::string& v) {
                               if (v != "neutron" && v != "custom") {
                                   throw ValidationError("config key '" + k + "': expected neutron or custom");
                               }
                               c.cow_preset = v;
                           },
                           [](const ScenarioConfig& c) { return c.cow_preset; }};
        t["cow.mass"] = number(cow, &ScenarioConfig::cow_mass);
        t["cow.radius"] = number(cow, &ScenarioConfig::cow_radius);
        t["cow.L"] = number(cow, &ScenarioConfig::cow_L);
        t["cow.v"] = number(cow, &ScenarioConfig::cow_v);
        for (const char* k : {"cow.mass", "cow.radius", "cow.L", "cow.v"}) {
            t[k].present = [](const ScenarioConfig& c) { return c.cow_preset == "custom"; };
        }
        t["cow.delta_start"] = number(cow, &ScenarioConfig::delta_start);
        t["cow.delta_stop"] = number(cow, &ScenarioConfig::delta_stop);
        t["cow.delta_n"] = count(cow, &ScenarioConfig::delta_n);
        return t;
    }();
    return table;
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
    case ScenarioKind::potential_scan: return "potential-scan";
    case ScenarioKind::free_check: return "free-check";
    case ScenarioKind::two_packet_decoherence: return "two-packet-decoherence";
    case ScenarioKind::perturbative_crosscheck: return "perturbative-crosscheck";
    case ScenarioKind::cow_sweep: return "cow-sweep";
    }
    return "?";
}

ScenarioKind scenario_from_string(std::string_view name) {
    for (ScenarioKind k : kAll) {
        if (to_string(k) == name) return k;
    }
    throw ValidationError("config key 'scenario': unknown scenario '" + std::string(name) + "'");
}

ScenarioConfig default_config(ScenarioKind kind) {
    ScenarioConfig c;
    c.scenario = kind;
    c.evolution.dt = kDoublingTime / 1000.0;
    c.evolution.steps = 1000;
    c.evolution.record_every = 100;
    c.evolution.d_cut = 4.0 * c.packet.width;
    switch (kind) {
    case ScenarioKind::potential_scan:
        c.coupling = 1.0;
        break;
    case ScenarioKind::free_check:
        c.coupling = 0.0;
        break;
    case ScenarioKind::two_packet_decoherence:
        c.coupling = 0.1;
        c.evolution.record_every = 50;
        c.scan_couplings = {0.025, 0.05, 0.1, 0.2, 0.4, 0.8};
        break;
    case ScenarioKind::perturbative_crosscheck:
        c.evolution.record_every = 0;
        break;
    case ScenarioKind::cow_sweep:
        c.units = UnitMode::si;
        break;
    }
    return c;
}

std::pair<double, double> ScenarioConfig::resolved_coupling_and_radius() const {
    if (species_mass_si) {
        const ParticleSpecies si(*species_mass_si, *species_radius_si);
        const UnitSystem dimless = to_dimensionless(si, UnitSystem::si(), length_unit_si);
        return {dimless.G, express(si, UnitSystem::si(), dimless).radius};
    }
    return {coupling, radius};
}

std::vector<std::pair<std::string, std::string>> ScenarioConfig::resolved() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("scenario", std::string(to_string(scenario)));
    for (const auto& [key, spec] : key_table()) {
        if (spec.scenarios.count(scenario) && spec.present(*this)) out.emplace_back(key, spec.get(*this));
    }
    return out;
}

void validate(const ScenarioConfig& c) {
    auto fail = [](const std::string& key, const std::string& what) {
        throw ValidationError("config key '" + key + "': " + what);
    };
    const bool evolution = kEvolution.count(c.scenario) > 0;
    const bool any_si = c.species_mass_si || c.species_radius_si || c.length_unit_si;
    if (any_si && !(c.species_mass_si && c.species_radius_si)) {
        fail("species.mass", "species.mass and species.radius must be given together");
    }
    if (c.species_mass_si && !(*c.species_mass_si > 0.0)) fail("species.mass", "must be > 0");
    if (c.species_radius_si && !(*c.species_radius_si > 0.0)) fail("species.radius", "must be > 0");
    if (c.length_unit_si && !(*c.length_unit_si > 0.0)) fail("length_unit", "must be > 0");
    if (!(c.radius > 0.0)) fail("radius", "must be > 0");
    if (!(c.coupling >= 0.0)) fail("coupling", "must be >= 0");

    if (c.scenario == ScenarioKind::potential_scan) {
        if (!(c.r_max > 0.0)) fail("potential.r_max", "must be > 0");
        if (c.samples < 2) fail("potential.samples", "must be >= 2");
        if (c.units == UnitMode::si && !c.species_mass_si) {
            fail("species.mass", "SI potential scans need species.mass and species.radius");
        }
    }
    if (evolution) {
        if (!(c.x_max > c.x_min)) fail("grid.x_max", "must exceed grid.x_min");
        if (c.n < 8 || (c.n & (c.n - 1)) != 0) {
            fail("grid.n", "must be a power of two >= 8, got " + std::to_string(c.n));
        }
        const Grid1D grid(c.x_min, c.x_max, c.n);
        if (!(c.evolution.dt > 0.0)) fail("evolve.dt", "must be > 0");
        if (c.evolution.steps < 1) fail("evolve.steps", "must be >= 1");
        const double bound = cfl_dt_bound(grid, 1.0, 1.0);
        if (!(c.evolution.dt < bound)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "violates the CFL bound dt * hbar k_max^2 / (2m) < pi/4; need dt < " << bound << ", got "
                << c.evolution.dt;
            fail("evolve.dt", msg.str());
        }
        if (c.evolution.boundary == Boundary::absorbing &&
            !(c.evolution.mask_width > 0.0 && c.evolution.mask_width < 0.25)) {
            fail("evolve.mask_width", "must lie in (0, 0.25)");
        }
        if (!(c.evolution.mask_strength >= 0.0)) fail("evolve.mask_strength", "must be >= 0");
        if (!(c.evolution.d_cut > 0.0)) fail("d_cut", "must be > 0");
        if (!(c.packet.width > 2.0 * grid.dx())) {
            fail("packet.width", "must exceed 2 dx = " + format_double(2.0 * grid.dx()));
        }
        std::vector<GaussianPacket> packets{c.packet};
        if (c.scenario == ScenarioKind::two_packet_decoherence) {
            if (!(c.separation > 0.0)) fail("packet.separation", "must be > 0");
            packets = {{c.packet.center - 0.5 * c.separation, c.packet.width, c.packet.momentum},
                       {c.packet.center + 0.5 * c.separation, c.packet.width, c.packet.momentum}};
            if (c.scan_couplings.empty()) fail("scan.couplings", "must not be empty");
            for (std::size_t i = 0; i < c.scan_couplings.size(); ++i) {
                if (!(c.scan_couplings[i] > 0.0)) fail("scan.couplings", "entries must be > 0");
                if (i && !(c.scan_couplings[i] > c.scan_couplings[i - 1])) {
                    fail("scan.couplings", "must be strictly increasing");
                }
            }
            if (c.scan_steps < 1 || c.scan_steps > c.evolution.steps) {
                fail("scan.steps", "must lie in [1, evolve.steps]");
            }
        }
        for (const GaussianPacket& p : packets) {
            if (packet_tail_mass(grid, p) >= 1e-10) {
                fail("packet.center", "packet at " + format_double(p.center) +
                                          " reaches the outer 20% of the grid");
            }
        }
        if (c.scenario == ScenarioKind::perturbative_crosscheck &&
            !(c.target_action > 0.0 && c.target_action < kDysonActionLimit)) {
            fail("perturbative.target_action", "must lie in (0, 0.1)");
        }
        (void)c.resolved_coupling_and_radius();
    }
    if (c.scenario == ScenarioKind::cow_sweep) {
        if (!(c.cow_mass > 0.0)) fail("cow.mass", "must be > 0");
        if (!(c.cow_radius > 0.0)) fail("cow.radius", "must be > 0");
        if (!(c.cow_L > 0.0)) fail("cow.L", "must be > 0");
        if (!(c.cow_v > 0.0)) fail("cow.v", "must be > 0");
        if (c.delta_n < 2) fail("cow.delta_n", "must be >= 2");
        if (!(c.delta_stop > c.delta_start)) fail("cow.delta_stop", "must exceed cow.delta_start");
    }
}

ScenarioConfig parse_config(std::string_view text) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        std::string key = trim(std::string_view(stripped).substr(0, eq));
        std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (key.empty()) throw ValidationError("config line " + std::to_string(line_no) + ": empty key");
        if (!seen.insert(key).second) throw ValidationError("config key '" + key + "': duplicate assignment");
        entries.emplace_back(std::move(key), std::move(value));
    }

    const auto scenario_it = std::find_if(entries.begin(), entries.end(),
                                          [](const auto& e) { return e.first == "scenario"; });
    if (scenario_it == entries.end()) throw ValidationError("config key 'scenario': required");
    ScenarioConfig cfg = default_config(scenario_from_string(scenario_it->second));

    const auto& table = key_table();
    bool d_cut_set = false;
    bool units_set = false;
    for (const auto& [key, value] : entries) {
        if (key == "scenario") continue;
        const auto it = table.find(key);
        if (it == table.end()) throw ValidationError("config key '" + key + "': unknown key");
        if (!it->second.scenarios.count(cfg.scenario)) {
            throw ValidationError("config key '" + key + "': does not apply to scenario " +
                                  std::string(to_string(cfg.scenario)));
        }
        it->second.set(cfg, key, value);
        d_cut_set = d_cut_set || key == "d_cut";
        units_set = units_set || key == "units";
    }
    if (!d_cut_set) cfg.evolution.d_cut = 4.0 * cfg.packet.width;
    if (cfg.scenario == ScenarioKind::potential_scan && !units_set && cfg.species_mass_si) {
        cfg.units = UnitMode::si;
    }
    if (cfg.scenario == ScenarioKind::cow_sweep && cfg.cow_preset == "neutron") {
        const auto custom = {"cow.mass", "cow.radius", "cow.L", "cow.v"};
        for (const char* k : custom) {
            if (seen.count(k)) {
                throw ValidationError(std::string("config key '") + k +
                                      "': set cow.preset = custom to override preset values");
            }
        }
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

} // namespace nng::runner
