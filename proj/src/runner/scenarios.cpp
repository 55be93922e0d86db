#include "nng/runner/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nng/errors.hpp"
#include "nng/gravpotential.hpp"
#include "nng/interferometer.hpp"
#include "nng/kernels.hpp"
#include "nng/reduce.hpp"
#include "nng/runner/output.hpp"

namespace nng::runner {

namespace fs = std::filesystem;

bool ScenarioResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

Check below(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, "<", value < threshold};
}

Check at_most(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, "<=", value <= threshold};
}

Check above(std::string name, double value, double threshold) {
    return {std::move(name), value, threshold, ">", value > threshold};
}

Check within(std::string name, double value, double lo, double hi) {
    return {std::move(name), value, hi, "in [" + format_double(lo) + ", " + format_double(hi) + "]",
            value >= lo && value <= hi};
}

Check holds(std::string name, bool ok) { return {std::move(name), ok ? 1.0 : 0.0, 1.0, "==", ok}; }

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

void write_timeseries(const fs::path& path, const EvolutionRecord& record) {
    CsvWriter csv(path, {"t", "norm", "purity", "linear_entropy", "vn_entropy", "coherence_offdiag"});
    for (const SnapshotSummary& s : record.observables) {
        csv.row({s.time, s.norm, s.report.purity, s.report.linear_entropy, s.report.von_neumann_entropy,
                 s.report.coherence_offdiag});
    }
}

// Mean and variance of a density sampled on the grid.
std::pair<double, double> moments(const Grid1D& grid, const std::vector<double>& p) {
    double mean = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) mean += grid.x(i) * p[i];
    mean *= grid.dx();
    double var = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) var += (grid.x(i) - mean) * (grid.x(i) - mean) * p[i];
    return {mean, var * grid.dx()};
}

std::vector<double> density_from_rows(const MetaState& state) {
    std::vector<double> p = kernels::row_norms(state.amplitudes());
    for (double& v : p) v *= state.grid().dx();
    return p;
}

PairPotential dimensionless_pair(double coupling, double radius) {
    return PairPotential(ParticleSpecies(1.0, radius), UnitSystem::dimensionless(coupling));
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// ---------------------------------------------------------------- potential

ScenarioResult potential_scan(const ScenarioConfig& cfg, const fs::path& out) {
    ScenarioResult res;
    const bool si = cfg.units == UnitMode::si;
    const PairPotential pair =
        si ? PairPotential(ParticleSpecies(*cfg.species_mass_si, *cfg.species_radius_si), UnitSystem::si())
           : PairPotential(ParticleSpecies(1.0, cfg.radius), UnitSystem::dimensionless(cfg.coupling));
    const double R = pair.radius();
    const double gm2R = pair.G() * pair.mass() * pair.mass() / R;

    const auto r = linspace(0.0, cfg.r_max, cfg.samples);
    std::vector<double> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = pair.evaluate(r[i]);
    write_csv(out / "potential.csv", {"r", "V_G"}, {r, v});
    res.files.push_back(out / "potential.csv");

    auto rel = [](double a, double b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); };
    const double v0 = pair.evaluate(0.0);
    const double v2_in = pair.overlap_branch(2.0 * R);
    const double v2_out = pair.newtonian_branch(2.0 * R);
    const double eps = 1e-9 * R;
    const double v2 = pair.evaluate(2.0 * R);
    const double continuity = v2 == 0.0 ? 0.0 : std::abs(pair.evaluate(2.0 * R - eps) - pair.evaluate(2.0 * R + eps)) / std::abs(v2);

    bool nonpositive = true;
    bool monotone = true;
    double previous = pair.evaluate(0.0);
    for (int i = 0; i <= 10000; ++i) {
        const double value = pair.evaluate(10.0 * R * i / 10000.0);
        nonpositive = nonpositive && value <= 0.0;
        monotone = monotone && value >= previous;
        previous = value;
    }
    const double tail_r = 1e3 * R;
    const double tail = gm2R == 0.0 ? 0.0 : rel(pair.evaluate(tail_r) * tail_r, -0.5 * gm2R * R);

    // Closed form vs quadrature for the separating-arm action across speeds
    // and flight times from never-separating to far-separating.
    double worst_action = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double T = R * std::pow(10.0, -1.0 + 0.3 * i);
        const SeparatingAction s = action_integral_separating(pair, 1.0, T);
        worst_action = std::max(worst_action, s.relative_difference);
    }

    res.summary["units"] = si ? "si" : "dimensionless";
    res.summary["G"] = pair.G();
    res.summary["mass"] = pair.mass();
    res.summary["radius"] = R;
    res.summary["v_at_zero"] = v0;
    res.summary["v_at_zero_rel_err"] = rel(v0, -0.6 * gm2R);
    res.summary["v_at_2R_overlap_branch"] = v2_in;
    res.summary["v_at_2R_newtonian_branch"] = v2_out;
    res.summary["v_at_2R_rel_err"] = std::max(rel(v2_in, -0.25 * gm2R), rel(v2_out, -0.25 * gm2R));
    res.summary["continuity_rel_mismatch"] = continuity;
    res.summary["nonpositive"] = nonpositive;
    res.summary["monotone"] = monotone;
    res.summary["tail_rel_err"] = tail;
    res.summary["action_sweep_max_rel_diff"] = worst_action;

    res.checks.push_back(below("v_at_zero_rel_err", res.summary["v_at_zero_rel_err"], 1e-12));
    res.checks.push_back(below("v_at_2R_rel_err", res.summary["v_at_2R_rel_err"], 1e-12));
    res.checks.push_back(below("continuity_rel_mismatch", continuity, 1e-8));
    res.checks.push_back(holds("nonpositive", nonpositive));
    res.checks.push_back(holds("monotone", monotone));
    res.checks.push_back(below("tail_rel_err", tail, 1e-3));
    res.checks.push_back(below("action_sweep_max_rel_diff", worst_action, 1e-10));
    return res;
}

// ---------------------------------------------------------------- free

ScenarioResult free_check(const ScenarioConfig& cfg, const fs::path& out) {
    ScenarioResult res;
    const Grid1D grid(cfg.x_min, cfg.x_max, cfg.n);
    const double radius = cfg.resolved_coupling_and_radius().second;
    const PairPotential pair = dimensionless_pair(0.0, radius);
    const GaussianPacket& packet = cfg.packet;
    MetaState state = gaussian_product_metastate(grid, packet.center, packet.width, packet.momentum);

    const EvolutionRecord record = evolve(state, ExternalPotential::none(), pair, cfg.evolution);
    const InvariantSummary inv = summarize_invariants(record);

    auto exact_variance = [&](double t) {
        const double s2 = packet.width * packet.width;
        const double q = t / (2.0 * s2);
        return s2 * (1.0 + q * q);
    };
    auto exact_density = [&](double x, double t) {
        const double var = exact_variance(t);
        const double d = x - packet.center - packet.momentum * t;
        return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
    };

    double worst_spread = 0.0;
    double worst_density = 0.0;
    double worst_purity = 0.0;
    for (const SnapshotSummary& s : record.observables) {
        const auto& p = s.report.position_density;
        const double var = moments(grid, p).second;
        worst_spread = std::max(worst_spread, std::abs(var / exact_variance(s.time) - 1.0));
        std::vector<double> exact(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) exact[i] = exact_density(grid.x(i), s.time);
        worst_density = std::max(worst_density, max_abs_diff(p, exact) / *std::max_element(exact.begin(), exact.end()));
        worst_purity = std::max(worst_purity, std::abs(s.report.purity - 1.0));
    }

    const SnapshotSummary& last = record.observables.back();
    std::vector<double> exact_final(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) exact_final[i] = exact_density(grid.x(i), last.time);
    const double final_width = std::sqrt(moments(grid, last.report.position_density).second);

    write_timeseries(out / "timeseries.csv", record);
    write_csv(out / "density_final.csv", {"x", "density", "density_analytic"},
              {grid.xs(), last.report.position_density, exact_final});
    res.files = {out / "timeseries.csv", out / "density_final.csv"};
    for (const auto& f : write_field_dump(out / "final_state", *record.final_state, UnitMode::dimensionless)) {
        res.files.push_back(f);
    }

    res.summary["t_end"] = last.time;
    res.summary["width_initial"] = packet.width;
    res.summary["width_final"] = final_width;
    res.summary["width_ratio"] = final_width / packet.width;
    res.summary["spreading_max_rel_err"] = worst_spread;
    res.summary["density_max_rel_err"] = worst_density;
    res.summary["purity_max_deviation"] = worst_purity;
    res.summary["invariants"] = to_json(inv);

    res.checks.push_back(below("spreading_max_rel_err", worst_spread, 1e-4));
    res.checks.push_back(below("density_max_rel_err", worst_density, 1e-4));
    res.checks.push_back(below("purity_max_deviation", worst_purity, 1e-8));
    add_invariant_checks(inv, "", cfg.evolution.boundary, res.checks);
    return res;
}

// ---------------------------------------------------------------- two-packet

ScenarioResult two_packet(const ScenarioConfig& cfg, const fs::path& out) {
    ScenarioResult res;
    const Grid1D grid(cfg.x_min, cfg.x_max, cfg.n);
    const auto [coupling, radius] = cfg.resolved_coupling_and_radius();
    const GaussianPacket& p = cfg.packet;
    const std::vector<GaussianPacket> packets = {
        {p.center - 0.5 * cfg.separation, p.width, p.momentum},
        {p.center + 0.5 * cfg.separation, p.width, p.momentum}};
    const MetaState initial = superposition_product_metastate(grid, packets);

    const EvolutionRecord record =
        evolve(initial, ExternalPotential::none(), dimensionless_pair(coupling, radius), cfg.evolution);
    const InvariantSummary inv = summarize_invariants(record);
    double purity_min = 1.0;
    for (const SnapshotSummary& s : record.observables) purity_min = std::min(purity_min, s.report.purity);
    write_timeseries(out / "timeseries.csv", record);
    res.files.push_back(out / "timeseries.csv");

    // Initial decay rate (P(0) - P(t_w)) / t_w across the coupling scan.
    const double purity0 = purity(partial_trace(initial));
    EvolutionConfig scan_cfg = cfg.evolution;
    scan_cfg.steps = cfg.scan_steps;
    scan_cfg.record_every = 0;
    scan_cfg.observe = false;
    const double window = static_cast<double>(cfg.scan_steps) * cfg.evolution.dt;
    std::vector<double> scan_purity;
    std::vector<double> rates;
    for (double g : cfg.scan_couplings) {
        const EvolutionRecord r = evolve(initial, ExternalPotential::none(), dimensionless_pair(g, radius), scan_cfg);
        const double pw = purity(partial_trace(*r.final_state));
        scan_purity.push_back(pw);
        rates.push_back((purity0 - pw) / window);
    }
    bool monotone = true;
    for (std::size_t i = 1; i < rates.size(); ++i) monotone = monotone && rates[i] >= rates[i - 1];
    write_csv(out / "scan.csv", {"coupling", "t_window", "purity_end", "decay_rate"},
              {cfg.scan_couplings, std::vector<double>(rates.size(), window), scan_purity, rates});
    res.files.push_back(out / "scan.csv");

    const SnapshotSummary& last = record.observables.back();
    res.summary["coupling"] = coupling;
    res.summary["radius"] = radius;
    res.summary["separation"] = cfg.separation;
    res.summary["purity_initial"] = record.observables.front().report.purity;
    res.summary["purity_final"] = last.report.purity;
    res.summary["purity_min"] = purity_min;
    res.summary["purity_drop"] = 1.0 - purity_min;
    res.summary["vn_entropy_final"] = last.report.von_neumann_entropy;
    res.summary["scan_window"] = window;
    res.summary["scan_couplings"] = cfg.scan_couplings;
    res.summary["scan_decay_rates"] = rates;
    res.summary["scan_rates_non_decreasing"] = monotone;
    res.summary["invariants"] = to_json(inv);

    res.checks.push_back(below("purity_min", purity_min, 1.0 - 1e-4));
    res.checks.push_back(holds("scan_rates_non_decreasing", monotone));
    add_invariant_checks(inv, "", cfg.evolution.boundary, res.checks);
    return res;
}

// ---------------------------------------------------------------- perturbative

ScenarioResult perturbative(const ScenarioConfig& cfg, const fs::path& out) {
    ScenarioResult res;
    const Grid1D grid(cfg.x_min, cfg.x_max, cfg.n);
    const double radius = cfg.resolved_coupling_and_radius().second;
    const MetaState initial =
        gaussian_product_metastate(grid, cfg.packet.center, cfg.packet.width, cfg.packet.momentum);
    const double duration = static_cast<double>(cfg.evolution.steps) * cfg.evolution.dt;
    // |V_G(0)| T / hbar = 0.6 g T / R at unit mass.
    const double coupling = cfg.target_action * radius / (0.6 * duration);

    struct Run {
        double coupling;
        std::vector<double> full, first, zeroth;
        double residual, first_order_size, first_order_norm_error;
        InvariantSummary invariants;
    };
    std::vector<Run> runs;
    for (double g : {coupling, 0.5 * coupling}) {
        const PairPotential pair = dimensionless_pair(g, radius);
        const EvolutionRecord record = evolve(initial, ExternalPotential::none(), pair, cfg.evolution);
        const DysonTerms dyson = dyson_first_order(initial, ExternalPotential::none(), pair, cfg.evolution);
        Run run{g, density_from_rows(*record.final_state), first_order_probability(dyson.psi0, dyson.psi1),
                density_from_rows(dyson.psi0), 0, 0, 0, summarize_invariants(record)};
        run.residual = max_abs_diff(run.full, run.first);
        run.first_order_size = max_abs_diff(run.full, run.zeroth);
        double total = 0.0;
        for (double v : run.first) total += v;
        run.first_order_norm_error = std::abs(total * grid.dx() - 1.0);
        runs.push_back(std::move(run));
    }
    const double ratio = runs[0].residual / runs[1].residual;

    write_csv(out / "perturbative.csv",
              {"x", "pr_full", "pr_first_order", "pr_full_half_coupling", "pr_first_order_half_coupling"},
              {grid.xs(), runs[0].full, runs[0].first, runs[1].full, runs[1].first});
    res.files.push_back(out / "perturbative.csv");

    Json per_run = Json::array();
    for (const Run& r : runs) {
        per_run.push_back({{"coupling", r.coupling},
                           {"action_estimate", 0.6 * r.coupling * duration / radius},
                           {"max_residual", r.residual},
                           {"first_order_effect", r.first_order_size},
                           {"first_order_norm_error", r.first_order_norm_error},
                           {"invariants", to_json(r.invariants)}});
    }
    res.summary["coupling"] = coupling;
    res.summary["radius"] = radius;
    res.summary["runs"] = per_run;
    res.summary["residual_ratio"] = ratio;

    res.checks.push_back(within("residual_ratio", ratio, 3.5, 4.5));
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const std::string prefix = i == 0 ? "full_coupling." : "half_coupling.";
        res.checks.push_back(below(prefix + "first_order_norm_error", runs[i].first_order_norm_error, 1e-8));
        add_invariant_checks(runs[i].invariants, prefix, cfg.evolution.boundary, res.checks);
    }
    return res;
}

// ---------------------------------------------------------------- cow

ScenarioResult cow_sweep(const ScenarioConfig& cfg, const fs::path& out) {
    ScenarioResult res;
    InterferometerConfig icfg = cow_neutron_preset();
    if (cfg.cow_preset == "custom") {
        icfg = InterferometerConfig{ParticleSpecies(cfg.cow_mass, cfg.cow_radius), cfg.cow_L, cfg.cow_v, 0.0,
                                    UnitSystem::si()};
    }
    const double hbar = icfg.units.hbar;
    const auto phases = linspace(cfg.delta_start, cfg.delta_stop, cfg.delta_n);

    CsvWriter csv(out / "cow.csv", {"delta", "prob_zeroth", "re_AaStar", "im_AaStar", "S_G0", "S_G1"});
    res.files.push_back(out / "cow.csv");
    double max_abs_re = 0.0;
    double max_re_ratio = 0.0;
    double max_prob_correction = 0.0;
    double max_complement = 0.0;
    double max_shifted = 0.0;
    double max_oracle_re_ratio = 0.0;
    double max_oracle_diff = 0.0;
    bool all_perturbative = true;
    CorrectionResult last{};
    for (double phase : phases) {
        icfg.delta = phase * hbar;
        const CorrectionResult c = correction(icfg);
        csv.row({icfg.delta, c.prob_zeroth, c.Aa_star.real(), c.Aa_star.imag(), c.S_G0, c.S_G1});
        max_abs_re = std::max(max_abs_re, std::abs(c.Aa_star.real()));
        if (std::abs(c.Aa_star) > 0.0) max_re_ratio = std::max(max_re_ratio, std::abs(c.Aa_star.real()) / std::abs(c.Aa_star));
        max_prob_correction = std::max(max_prob_correction, std::abs(c.prob_correction));
        const PortProbabilities ports = port_probabilities(icfg);
        max_complement = std::max(max_complement, std::abs(ports.detector + ports.complementary - 1.0));
        // The same sum with the shift applied to the phase picks up the
        // rounding of delta + pi hbar, a few ulp of the phase.
        InterferometerConfig shifted = icfg;
        shifted.delta += std::numbers::pi * hbar;
        max_shifted = std::max(max_shifted,
                               std::abs(zeroth_order_probability(icfg) + zeroth_order_probability(shifted) - 1.0));
        all_perturbative = all_perturbative && c.perturbative;

        const EnumerationReport oracle = pair_enumeration_oracle(icfg, HiddenTrace::recombination_point);
        const double scale = std::max(std::abs(oracle.result.Aa_star), std::abs(c.Aa_star));
        if (scale > 0.0) {
            max_oracle_re_ratio = std::max(max_oracle_re_ratio, std::abs(oracle.result.Aa_star.real()) / scale);
            max_oracle_diff = std::max(max_oracle_diff, std::abs(oracle.result.Aa_star - c.Aa_star) /
                                                            (std::abs(c.S_G0) / hbar));
        }
        last = c;
    }

    auto oracle_json = [&](HiddenTrace convention) {
        const EnumerationReport r = pair_enumeration_oracle(icfg, convention);
        return Json{{"convention", convention == HiddenTrace::recombination_point ? "recombination_point" : "all_ports"},
                    {"coincident_pairs", r.coincident_pairs},
                    {"separating_pairs", r.separating_pairs},
                    {"formula_coincident", r.formula.coincident},
                    {"formula_separating", r.formula.separating},
                    {"enumerated_coincident", r.enumeration.coincident},
                    {"enumerated_separating", r.enumeration.separating},
                    {"max_coefficient_diff", r.max_coefficient_diff},
                    {"coefficients_agree", r.coefficients_agree},
                    {"max_out_of_band", r.max_out_of_band},
                    {"zeroth_agrees", r.zeroth_agrees}};
    };

    res.summary["preset"] = cfg.cow_preset;
    res.summary["mass"] = icfg.species.mass;
    res.summary["radius"] = icfg.species.radius;
    res.summary["L"] = icfg.L;
    res.summary["v"] = icfg.v;
    res.summary["T"] = icfg.flight_time();
    res.summary["S_G0"] = last.S_G0;
    res.summary["S_G1"] = last.S_G1;
    res.summary["S_G0_over_hbar"] = last.S_G0 / hbar;
    res.summary["perturbative"] = all_perturbative;
    res.summary["points"] = cfg.delta_n;
    res.summary["max_abs_re_AaStar"] = max_abs_re;
    res.summary["max_re_over_abs_AaStar"] = max_re_ratio;
    res.summary["max_abs_prob_correction"] = max_prob_correction;
    res.summary["max_complementary_port_defect"] = max_complement;
    res.summary["max_shifted_phase_port_defect"] = max_shifted;
    res.summary["oracle_max_re_over_abs_AaStar"] = max_oracle_re_ratio;
    res.summary["oracle_max_diff_over_action"] = max_oracle_diff;
    res.summary["oracle"] = Json::array({oracle_json(HiddenTrace::recombination_point),
                                         oracle_json(HiddenTrace::all_ports)});

    res.checks.push_back(at_most("max_re_over_abs_AaStar", max_re_ratio, 1e-15));
    res.checks.push_back(at_most("max_abs_prob_correction", max_prob_correction, 1e-15 * std::abs(last.S_G0) / hbar));
    res.checks.push_back(at_most("max_complementary_port_defect", max_complement, 1e-15));
    const double widest = std::max(std::abs(cfg.delta_start), std::abs(cfg.delta_stop)) + std::numbers::pi;
    const double phase_ulp = std::nextafter(widest, 2.0 * widest) - widest;
    res.checks.push_back(at_most("max_shifted_phase_port_defect", max_shifted, 1e-15 + 4.0 * phase_ulp));
    res.checks.push_back(below("oracle_max_re_over_abs_AaStar", max_oracle_re_ratio, 1e-12));
    res.checks.push_back(holds("perturbative", all_perturbative));
    return res;
}

} // namespace

InvariantSummary summarize_invariants(const EvolutionRecord& record) {
    InvariantSummary inv;
    inv.snapshots = record.observables.size();
    inv.max_step_norm_drift = record.max_step_norm_drift;
    inv.min_eigenvalue = std::numeric_limits<double>::infinity();
    inv.max_step_norm_increase = record.max_step_norm_increase;
    inv.norms_non_increasing = record.max_step_norm_increase <= kNormRoundoff;
    for (double norm : record.norms) inv.max_norm_error = std::max(inv.max_norm_error, std::abs(norm - 1.0));
    for (const SnapshotSummary& s : record.observables) {
        inv.max_trace_error = std::max(inv.max_trace_error, std::abs(s.trace - 1.0));
        inv.max_hermiticity = std::max(inv.max_hermiticity, s.hermiticity);
        inv.min_eigenvalue = std::min(inv.min_eigenvalue, s.report.min_eigenvalue);
        inv.max_exchange_asymmetry = std::max(inv.max_exchange_asymmetry, s.exchange_asymmetry);
    }
    if (record.observables.empty()) inv.min_eigenvalue = 0.0;
    return inv;
}

void add_invariant_checks(const InvariantSummary& inv, const std::string& prefix, Boundary boundary,
                          std::vector<Check>& checks) {
    if (boundary == Boundary::periodic) {
        checks.push_back(below(prefix + "max_norm_error", inv.max_norm_error, 1e-8));
        checks.push_back(below(prefix + "max_trace_error", inv.max_trace_error, 1e-8));
    } else {
        checks.push_back(holds(prefix + "norms_non_increasing", inv.norms_non_increasing));
    }
    checks.push_back(below(prefix + "max_hermiticity", inv.max_hermiticity, 1e-10));
    checks.push_back(above(prefix + "min_eigenvalue", inv.min_eigenvalue, -1e-8));
    checks.push_back(below(prefix + "max_exchange_asymmetry", inv.max_exchange_asymmetry, 1e-10));
}

Json to_json(const InvariantSummary& inv) {
    return Json{{"snapshots", inv.snapshots},
                {"max_norm_error", inv.max_norm_error},
                {"max_step_norm_drift", inv.max_step_norm_drift},
                {"max_step_norm_increase", inv.max_step_norm_increase},
                {"max_trace_error", inv.max_trace_error},
                {"max_hermiticity", inv.max_hermiticity},
                {"min_eigenvalue", inv.min_eigenvalue},
                {"max_exchange_asymmetry", inv.max_exchange_asymmetry},
                {"norms_non_increasing", inv.norms_non_increasing}};
}

ScenarioResult run_scenario(const ScenarioConfig& cfg, const fs::path& out_dir) {
    validate(cfg);
    switch (cfg.scenario) {
    case ScenarioKind::potential_scan: return potential_scan(cfg, out_dir);
    case ScenarioKind::free_check: return free_check(cfg, out_dir);
    case ScenarioKind::two_packet_decoherence: return two_packet(cfg, out_dir);
    case ScenarioKind::perturbative_crosscheck: return perturbative(cfg, out_dir);
    case ScenarioKind::cow_sweep: return cow_sweep(cfg, out_dir);
    }
    throw ValidationError("unknown scenario");
}

} // namespace nng::runner
