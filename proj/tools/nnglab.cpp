// nnglab: command-line front end for the scenario runner and the
// potential / interferometer passthroughs.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>

#include "nng/errors.hpp"
#include "nng/gravpotential.hpp"
#include "nng/interferometer.hpp"
#include "nng/runner/output.hpp"
#include "nng/runner/run.hpp"

namespace {

using namespace nng;
using runner::exit_io;
using runner::exit_numerical;
using runner::exit_ok;
using runner::exit_validation;

struct Sweep {
    double start = 0.0;
    double stop = 0.0;
    std::size_t n = 0;
};

Sweep parse_sweep(const std::string& text) {
    const auto a = text.find(':');
    const auto b = text.find(':', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) {
        throw ValidationError("--delta-sweep must look like start:stop:n, got '" + text + "'");
    }
    Sweep s;
    try {
        std::size_t used = 0;
        s.start = std::stod(text.substr(0, a), &used);
        s.stop = std::stod(text.substr(a + 1, b - a - 1), &used);
        const long n = std::stol(text.substr(b + 1), &used);
        if (used != text.size() - b - 1 || n < 2) throw std::invalid_argument("n");
        s.n = static_cast<std::size_t>(n);
    } catch (const std::logic_error&) {
        throw ValidationError("--delta-sweep must look like start:stop:n with n >= 2, got '" + text + "'");
    }
    return s;
}

int potential_cmd(double mass, double radius, double r_max, std::size_t samples, const std::string& out) {
    if (!(r_max > 0.0)) throw ValidationError("--r-max must be positive");
    if (samples < 2) throw ValidationError("--samples must be at least 2");
    const PairPotential pair(ParticleSpecies(mass, radius), UnitSystem::si());
    std::vector<double> r(samples), v(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        r[i] = r_max * static_cast<double>(i) / static_cast<double>(samples - 1);
        v[i] = pair.evaluate(r[i]);
    }
    runner::write_csv(out, {"r", "V_G"}, {r, v});
    return exit_ok;
}

int cow_cmd(const Sweep& sweep, const InterferometerConfig& base, const std::string& out) {
    InterferometerConfig cfg = base;
    cfg.validate();
    runner::CsvWriter csv(out, {"delta", "prob_zeroth", "re_AaStar", "im_AaStar", "S_G0", "S_G1"});
    for (std::size_t i = 0; i < sweep.n; ++i) {
        const double phase = sweep.start + (sweep.stop - sweep.start) * static_cast<double>(i) /
                                               static_cast<double>(sweep.n - 1);
        cfg.delta = phase * cfg.units.hbar;
        const CorrectionResult c = correction(cfg);
        csv.row({cfg.delta, c.prob_zeroth, c.Aa_star.real(), c.Aa_star.imag(), c.S_G0, c.S_G1});
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical lab for pair-of-histories gravitational meta-evolution"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    auto* run = app.add_subcommand("run", "Run a scenario from a key-value config file");
    run->add_option("--config", config_path, "Scenario config file")->required();
    run->add_option("--out", out_dir, "Output directory")->required();

    double mass = 0.0, radius = 0.0, r_max = 0.0;
    std::size_t samples = 1001;
    std::string potential_out;
    auto* potential = app.add_subcommand("potential", "Tabulate the pair potential V_G(r) in SI units");
    potential->add_option("--mass", mass, "Particle mass [kg]")->required();
    potential->add_option("--radius", radius, "Particle radius [m]")->required();
    potential->add_option("--r-max", r_max, "Largest separation [m]")->required();
    potential->add_option("--samples", samples, "Number of samples");
    potential->add_option("--out", potential_out, "Output CSV")->required();

    std::string sweep_text, preset = "neutron", cow_out;
    double cow_mass = 0.0, cow_radius = 0.0, cow_L = 0.0, cow_v = 0.0;
    auto* cow = app.add_subcommand("cow", "Sweep the interferometer phase; delta values are in units of hbar");
    cow->add_option("--delta-sweep", sweep_text, "start:stop:n over delta/hbar")->required();
    auto* preset_opt = cow->add_option("--preset", preset, "Species preset")->check(CLI::IsMember({"neutron"}));
    auto* m_opt = cow->add_option("--mass", cow_mass, "Particle mass [kg]");
    auto* r_opt = cow->add_option("--radius", cow_radius, "Particle radius [m]");
    auto* l_opt = cow->add_option("--L", cow_L, "Arm scale [m]");
    auto* v_opt = cow->add_option("--v", cow_v, "Beam speed [m/s]");
    for (auto* o : {m_opt, r_opt, l_opt, v_opt}) o->excludes(preset_opt);
    m_opt->needs(r_opt, l_opt, v_opt);
    r_opt->needs(m_opt);
    l_opt->needs(m_opt);
    v_opt->needs(m_opt);
    cow->add_option("--out", cow_out, "Output CSV")->required();

    app.add_subcommand("version", "Print the version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (*run) {
            const runner::RunOutcome outcome = runner::run_config_file(config_path, out_dir);
            if (outcome.exit_code != exit_ok) std::cerr << "nnglab: " << outcome.status << ": " << outcome.message << '\n';
            return outcome.exit_code;
        }
        if (*potential) return potential_cmd(mass, radius, r_max, samples, potential_out);
        if (*cow) {
            const Sweep sweep = parse_sweep(sweep_text);
            InterferometerConfig cfg = cow_neutron_preset();
            if (*m_opt) cfg = {ParticleSpecies(cow_mass, cow_radius), cow_L, cow_v, 0.0, UnitSystem::si()};
            return cow_cmd(sweep, cfg, cow_out);
        }
        std::cout << "nnglab " << NNG_VERSION << '\n';
        return exit_ok;
    } catch (const ValidationError& e) {
        std::cerr << "nnglab: " << e.what() << '\n';
        return exit_validation;
    } catch (const NumericalError& e) {
        std::cerr << "nnglab: " << e.what() << '\n';
        return exit_numerical;
    } catch (const IoError& e) {
        std::cerr << "nnglab: " << e.what() << '\n';
        return exit_io;
    }
}
