#include "nng/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "nng/errors.hpp"
#include "nng/gravpotential.hpp"

namespace nng {

void InterferometerConfig::validate() const {
    units.validate();
    if (!(L > 0.0) || !std::isfinite(L)) throw ValidationError("interferometer L must be positive");
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError("interferometer v must be positive");
    if (!std::isfinite(delta)) throw ValidationError("interferometer delta must be finite");
}

double zeroth_order_probability(const InterferometerConfig& cfg) {
    const double c = std::cos(cfg.delta / (2.0 * cfg.units.hbar));
    return c * c;
}

PortProbabilities port_probabilities(const InterferometerConfig& cfg) {
    const double half = cfg.delta / (2.0 * cfg.units.hbar);
    const double c = std::cos(half);
    const double s = std::sin(half);
    return {c * c, s * s};
}

namespace {

struct Actions {
    double coincident;
    double separating;
};

Actions pair_actions(const InterferometerConfig& cfg) {
    const PairPotential pair(cfg.species, cfg.units);
    const double T = cfg.flight_time();
    return {action_coincident(pair, T), action_separating_closed_form(pair, cfg.v, T)};
}

} // namespace

CorrectionResult correction(const InterferometerConfig& cfg) {
    cfg.validate();
    const double hbar = cfg.units.hbar;
    const double d = cfg.delta / hbar;
    CorrectionResult out;
    out.A = cplx{std::cos(0.5 * d), 0.0};
    out.prob_zeroth = zeroth_order_probability(cfg);

    const Actions s = pair_actions(cfg);
    out.S_G0 = s.coincident;
    out.S_G1 = s.separating;
    out.perturbative = std::abs(out.S_G0) / hbar < 0.1;
    if (out.S_G0 == 0.0) return out;   // G = 0: no correction

    const double bracket = 0.5 + std::cos(d) + 0.5 * std::cos(2.0 * d) +
                           (out.S_G1 / out.S_G0) * (1.0 + std::cos(d));
    // Purely imaginary by construction: the real part is an exact zero.
    out.Aa_star = cplx{0.0, -out.S_G0 / (4.0 * hbar) * bracket};
    out.prob_correction = 2.0 * out.Aa_star.real();
    if (std::abs(out.A) > 0.0) out.a = std::conj(out.Aa_star) / std::conj(out.A);
    return out;
}

namespace {

struct Enumerated {
    cplx A;
    cplx a;
    cplx Aa_star;
    double prob_zeroth;
    int coincident;
    int separating;
};

Enumerated enumerate_pairs(double d, double s0_over_hbar, double s1_over_hbar, HiddenTrace convention) {
    const double phase[2] = {0.5 * d, -0.5 * d};
    const double amplitude = 0.5;
    // Hidden output ports and the sign each hidden arm carries into them.
    const int port_count = convention == HiddenTrace::recombination_point ? 1 : 2;
    const double port_sign[2][2] = {{1.0, 1.0}, {1.0, -1.0}};

    Enumerated out{};
    for (int p = 0; p < port_count; ++p) {
        cplx A{0.0, 0.0};
        cplx a{0.0, 0.0};
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                const bool coincident = j == k;
                if (p == 0) (coincident ? out.coincident : out.separating) += 1;
                const double action = coincident ? s0_over_hbar : s1_over_hbar;
                const cplx path = amplitude * amplitude * port_sign[p][k] *
                                  std::polar(1.0, phase[j] + phase[k]);
                A += path;
                a += cplx{0.0, action} * path;
            }
        }
        if (p == 0) {
            out.A = A;
            out.a = a;
        }
        out.Aa_star += A * std::conj(a);
        out.prob_zeroth += std::norm(A);
    }
    return out;
}

// Cosine coefficients h = 0..2 of F(d) = -4 Im(Aa*) sampled on 16 points,
// plus the largest out-of-band component (h >= 3, and any real part).
void extract(double s0, double s1, HiddenTrace convention, std::array<double, 3>& coeffs,
             double& leakage) {
    constexpr int kSamples = 16;
    std::array<double, kSamples / 2 + 1> cos_coeff{};
    for (int m = 0; m < kSamples; ++m) {
        const double theta = 2.0 * std::numbers::pi * m / kSamples;
        const Enumerated e = enumerate_pairs(theta, s0, s1, convention);
        const double F = -4.0 * e.Aa_star.imag();
        leakage = std::max(leakage, std::abs(e.Aa_star.real()));
        for (int h = 0; h <= kSamples / 2; ++h) cos_coeff[h] += F * std::cos(h * theta);
    }
    for (int h = 0; h <= kSamples / 2; ++h) {
        cos_coeff[h] *= (h == 0 || h == kSamples / 2 ? 1.0 : 2.0) / kSamples;
    }
    for (int h = 0; h < 3; ++h) coeffs[h] = cos_coeff[h];
    for (int h = 3; h <= kSamples / 2; ++h) leakage = std::max(leakage, std::abs(cos_coeff[h]));
}

} // namespace

EnumerationReport pair_enumeration_oracle(const InterferometerConfig& cfg, HiddenTrace convention) {
    cfg.validate();
    const double hbar = cfg.units.hbar;
    const double d = cfg.delta / hbar;
    const Actions s = pair_actions(cfg);

    EnumerationReport report;
    report.convention = convention;
    const Enumerated e = enumerate_pairs(d, s.coincident / hbar, s.separating / hbar, convention);
    report.coincident_pairs = e.coincident;
    report.separating_pairs = e.separating;
    report.result.A = e.A;
    report.result.a = e.a;
    report.result.Aa_star = e.Aa_star;
    report.result.prob_zeroth = e.prob_zeroth;
    report.result.prob_correction = 2.0 * e.Aa_star.real();
    report.result.S_G0 = s.coincident;
    report.result.S_G1 = s.separating;
    report.result.perturbative = std::abs(s.coincident) / hbar < 0.1;

    report.formula.coincident = {0.5, 1.0, 0.5};
    report.formula.separating = {1.0, 1.0, 0.0};
    extract(1.0, 0.0, convention, report.enumeration.coincident, report.max_out_of_band);
    extract(0.0, 1.0, convention, report.enumeration.separating, report.max_out_of_band);
    for (int h = 0; h < 3; ++h) {
        report.max_coefficient_diff = std::max(
            {report.max_coefficient_diff,
             std::abs(report.formula.coincident[h] - report.enumeration.coincident[h]),
             std::abs(report.formula.separating[h] - report.enumeration.separating[h])});
    }
    report.coefficients_agree = report.max_coefficient_diff < 1e-12;
    report.zeroth_formula = zeroth_order_probability(cfg);
    report.zeroth_enumeration = e.prob_zeroth;
    report.zeroth_agrees = std::abs(report.zeroth_formula - report.zeroth_enumeration) < 1e-12;
    return report;
}

InterferometerConfig cow_neutron_preset(double delta) {
    return InterferometerConfig{ParticleSpecies(1.675e-27, 1e-15), 0.10, 2.2e3, delta, UnitSystem::si()};
}

double delta_from_uniform_field(double force, double height, double L, double v) {
    if (!(L > 0.0) || !(v > 0.0)) throw ValidationError("L and v must be positive");
    return force * height * L / v;
}

} // namespace nng
