// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fail.
//
// Scenario-level criteria are evaluated on the default scenario configs run
// through the same runner the CLI uses; each scenario runs twice, with
// different worker-thread counts, to cover determinism.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "nng/gravpotential.hpp"
#include "nng/interferometer.hpp"
#include "nng/runner/run.hpp"

using namespace nng;
using namespace nng::runner;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct ScenarioRun {
    Json summary;
    double seconds = 0.0;
    int exit_code = 0;
    bool deterministic = false;
    std::string detail;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::map<std::string, std::string> scientific_outputs(const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().filename() != "manifest.json") out[e.path().filename().string()] = slurp(e.path());
    }
    return out;
}

ScenarioRun run_twice(ScenarioKind kind, const fs::path& root) {
    const ScenarioConfig cfg = default_config(kind);
    const std::string name(to_string(kind));
    ScenarioRun result;

    setenv("NNG_NUM_THREADS", "1", 1);
    const auto t0 = Clock::now();
    const RunOutcome first = run(cfg, root / (name + "-a"));
    result.seconds = seconds_since(t0);
    result.exit_code = first.exit_code;
    result.summary = Json::parse(slurp(root / (name + "-a") / "summary.json"));

    setenv("NNG_NUM_THREADS", "2", 1);
    const RunOutcome second = run(cfg, root / (name + "-b"));
    unsetenv("NNG_NUM_THREADS");

    const auto a = scientific_outputs(root / (name + "-a"));
    const auto b = scientific_outputs(root / (name + "-b"));
    result.deterministic = a == b && second.exit_code == first.exit_code;
    std::size_t differing = 0;
    for (const auto& [file, bytes] : a) differing += !b.count(file) || b.at(file) != bytes;
    result.detail = name + ": " + std::to_string(a.size()) + " files, " + std::to_string(differing) + " differ";
    return result;
}

const Json& check(const ScenarioRun& r, const std::string& name) {
    for (const Json& c : r.summary["checks"]) {
        if (c["name"] == name) return c;
    }
    static const Json missing = Json{{"passed", false}, {"value", std::nan("")}};
    return missing;
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("%s criterion %d: %s | %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

} // namespace

int main() {
    const fs::path root = fs::temp_directory_path() / "nng_acceptance";
    fs::remove_all(root);
    fs::create_directories(root);

    // 1. Potential golden values and continuity.
    {
        const auto t0 = Clock::now();
        double worst = 0.0, worst_cont = 0.0;
        const PairPotential cases[] = {
            PairPotential(ParticleSpecies(1.0, 1.0), UnitSystem::dimensionless(1.0)),
            PairPotential(ParticleSpecies(2.0, 5.5), UnitSystem::dimensionless(0.37)),
            PairPotential(ParticleSpecies(1.675e-27, 1e-15), UnitSystem::si()),
        };
        for (const PairPotential& p : cases) {
            const double G = p.G(), m = p.mass(), R = p.radius();
            const double gm2R = G * m * m / R;
            worst = std::max({worst, rel(p.evaluate(0.0), -0.6 * gm2R), rel(p.evaluate(2.0 * R), -0.25 * gm2R),
                              rel(p.overlap_branch(2.0 * R), -0.25 * gm2R)});
            worst_cont = std::max(worst_cont, std::abs(p.evaluate(2.0 * R * (1 - 1e-9)) -
                                                       p.evaluate(2.0 * R * (1 + 1e-9))) /
                                                  std::abs(p.evaluate(2.0 * R)));
        }
        const double ms = 1e3 * seconds_since(t0);
        report(1, "potential golden values", worst < 1e-12 && worst_cont < 1e-8,
               "max rel err " + fmt(worst) + " (< 1e-12), continuity " + fmt(worst_cont) + " (< 1e-8), " +
                   fmt(ms) + " ms");
    }

    // 2 and 3 come from the cow-sweep scenario (1000-point neutron sweep).
    const ScenarioRun cow = run_twice(ScenarioKind::cow_sweep, root);
    {
        const Json& re = check(cow, "max_re_over_abs_AaStar");
        const Json& pc = check(cow, "max_abs_prob_correction");
        const bool ok = re["passed"] && pc["passed"] && cow.summary["results"]["points"] == 1000 && cow.seconds < 1.0;
        report(2, "COW null result", ok,
               "max |Re Aa*|/|Aa*| = " + fmt(re["value"]) + ", max |prob_correction| = " + fmt(pc["value"]) +
                   " over 1000 points, " + fmt(cow.seconds) + " s");
    }
    {
        // Closed-form fringe values and the complementary-port sum.
        const double hbar = codata::hbar;
        const bool exact = zeroth_order_probability(cow_neutron_preset(0.0)) == 1.0 &&
                           zeroth_order_probability(cow_neutron_preset(std::numbers::pi * hbar)) < 1e-30 &&
                           std::abs(zeroth_order_probability(cow_neutron_preset(0.5 * std::numbers::pi * hbar)) -
                                    0.5) < 1e-15;
        const Json& ports = check(cow, "max_complementary_port_defect");
        report(3, "zeroth-order fringe", exact && ports["passed"] && cow.seconds < 1.0,
               "cos^2 golden values " + std::string(exact ? "exact" : "off") + ", max |port sum - 1| = " +
                   fmt(ports["value"]) + " (<= 1e-15)");
    }

    // 4. Closed form vs adaptive quadrature over a 100-point (m, R, v, T) sweep.
    {
        const auto t0 = Clock::now();
        double worst = 0.0;
        int never = 0, far = 0;
        for (int im = 0; im < 2; ++im) {
            for (int iR = 0; iR < 2; ++iR) {
                for (int iv = 0; iv < 5; ++iv) {
                    for (int iT = 0; iT < 5; ++iT) {
                        const double m = im ? 1.675e-27 : 1e-17;
                        const double R = iR ? 1e-15 : 1e-7;
                        const double v = std::pow(10.0, -2.0 + 1.5 * iv);
                        // Flight times from 1% of the crossing time out to 1e6 crossings.
                        const double T = (2.0 * R / v) * std::pow(10.0, -2.0 + 2.0 * iT);
                        const PairPotential p(ParticleSpecies(m, R), UnitSystem::si());
                        worst = std::max(worst, action_integral_separating(p, v, T).relative_difference);
                        const double reach = std::numbers::sqrt2 * v * T / 2.0;
                        never += reach <= 2.0 * R;
                        far += reach > 1e3 * R;
                    }
                }
            }
        }
        const double s = seconds_since(t0);
        report(4, "separating-action oracle agreement", worst < 1e-10 && never > 0 && far > 0 && s < 10.0,
               "max rel diff " + fmt(worst) + " (< 1e-10) over 100 points, " + std::to_string(never) +
                   " never-separating, " + std::to_string(far) + " far-separating, " + fmt(s) + " s");
    }

    const ScenarioRun free = run_twice(ScenarioKind::free_check, root);
    {
        const Json& purity = check(free, "purity_max_deviation");
        const Json& density = check(free, "density_max_rel_err");
        const Json& spread = check(free, "spreading_max_rel_err");
        const Json& res = free.summary["results"];
        const bool ok = purity["passed"] && density["passed"] && spread["passed"] && free.seconds <= 300.0 &&
                        std::abs(res["width_ratio"].get<double>() - 2.0) < 1e-3;
        report(5, "single-history reduction at G = 0", ok,
               "512^2, 1000 steps: max |purity - 1| = " + fmt(purity["value"]) + ", density rel err " +
                   fmt(density["value"]) + ", spreading rel err " + fmt(spread["value"]) + ", width ratio " +
                   fmt(res["width_ratio"]) + ", " + fmt(free.seconds) + " s");
    }

    const ScenarioRun pert = run_twice(ScenarioKind::perturbative_crosscheck, root);
    {
        const Json& ratio = check(pert, "residual_ratio");
        const Json& runs = pert.summary["results"]["runs"];
        const bool ok = ratio["passed"] && check(pert, "full_coupling.first_order_norm_error")["passed"] &&
                        check(pert, "half_coupling.first_order_norm_error")["passed"] && pert.seconds <= 600.0;
        report(6, "perturbative consistency", ok,
               "action " + fmt(runs[0]["action_estimate"]) + ", residuals " + fmt(runs[0]["max_residual"]) + " -> " +
                   fmt(runs[1]["max_residual"]) + ", ratio " + fmt(ratio["value"]) + " (in [3.5, 4.5]), " +
                   fmt(pert.seconds) + " s");
    }

    const ScenarioRun two = run_twice(ScenarioKind::two_packet_decoherence, root);

    // 7. Structural invariants at every snapshot of every evolution scenario.
    {
        const char* invariant_checks[] = {"max_norm_error", "max_trace_error", "max_hermiticity", "min_eigenvalue",
                                          "max_exchange_asymmetry"};
        bool ok = true;
        std::map<std::string, double> worst;
        auto scan = [&](const ScenarioRun& r, const std::string& prefix) {
            for (const char* name : invariant_checks) {
                const Json& c = check(r, prefix + name);
                ok = ok && c["passed"].get<bool>();
                const double v = c["value"];
                const std::string key = name;
                if (key == "min_eigenvalue") worst[key] = worst.count(key) ? std::min(worst[key], v) : v;
                else worst[key] = std::max(worst[key], v);
            }
        };
        scan(free, "");
        scan(two, "");
        scan(pert, "full_coupling.");
        scan(pert, "half_coupling.");
        std::string detail;
        for (const auto& [k, v] : worst) detail += (detail.empty() ? "" : ", ") + k + " " + fmt(v);
        report(7, "meta-evolution invariants", ok, detail + " across free-check, two-packet, perturbative");
    }

    // 8. Decoherence demonstration.
    {
        const Json& purity = check(two, "purity_min");
        const Json& monotone = check(two, "scan_rates_non_decreasing");
        const Json& res = two.summary["results"];
        report(8, "decoherence demonstration", purity["passed"] && monotone["passed"] && two.seconds <= 900.0,
               "g = " + fmt(res["coupling"]) + ", min purity " + fmt(purity["value"]) + " (< 1 - 1e-4), decay rates " +
                   fmt(res["scan_decay_rates"].front()) + " .. " + fmt(res["scan_decay_rates"].back()) +
                   " non-decreasing over " + std::to_string(res["scan_couplings"].size()) + " couplings, " +
                   fmt(two.seconds) + " s");
    }

    // 9. Determinism: every scenario, two runs, 1 and 2 worker threads.
    {
        const ScenarioRun pot = run_twice(ScenarioKind::potential_scan, root);
        bool ok = true;
        std::string detail;
        for (const ScenarioRun* r : {&pot, &free, &two, &pert, &cow}) {
            ok = ok && r->deterministic;
            detail += (detail.empty() ? "" : "; ") + r->detail;
        }
        report(9, "determinism across runs and thread counts", ok, detail);
    }

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
