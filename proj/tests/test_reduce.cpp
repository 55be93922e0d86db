#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nng/errors.hpp"
#include "nng/reduce.hpp"

using namespace nng;

namespace {

std::vector<double> gaussian(const Grid1D& g, double c, double sigma) {
    std::vector<double> out(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double d = g.x(i) - c;
        out[i] = std::exp(-d * d / (4.0 * sigma * sigma));
    }
    return out;
}

void normalise(ComplexField& f, double dx) {
    double s = 0.0;
    for (cplx z : f.values()) s += std::norm(z);
    const double scale = 1.0 / std::sqrt(s * dx * dx);
    for (cplx& z : f.values()) z *= scale;
}

// (psi_L psi_L + psi_R psi_R) / sqrt 2 with far-apart packets.
MetaState bell_like(const Grid1D& g, double half_separation) {
    const auto l = gaussian(g, -half_separation, 1.0);
    const auto r = gaussian(g, half_separation, 1.0);
    ComplexField f(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = 0; j < g.n(); ++j) f(i, j) = l[i] * l[j] + r[i] * r[j];
    }
    normalise(f, g.dx());
    return MetaState(g, f);
}

} // namespace

TEST_CASE("product state reduces to a pure state") {
    const Grid1D g(-20.0, 20.0, 128);
    const auto psi = gaussian(g, 1.0, 1.0);
    const auto phi = gaussian(g, -2.0, 1.5);
    ComplexField f(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = 0; j < g.n(); ++j) f(i, j) = psi[i] * phi[j] * std::polar(1.0, 0.3 * g.x(i));
    }
    normalise(f, g.dx());
    const ReducedDensityMatrix rho = partial_trace(MetaState(g, f));
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
    CHECK(rho.hermiticity_defect() == 0.0);
    const DecoherenceReport r = decoherence_report(rho, 4.0);
    CHECK(std::abs(r.purity - 1.0) < 1e-10);
    CHECK(std::abs(r.linear_entropy) < 1e-6);
    CHECK(std::abs(r.von_neumann_entropy) < 1e-6);
    CHECK(r.min_eigenvalue > -1e-10);

    // The diagonal is |psi|^2 normalised.
    const auto p = position_probability(rho);
    double total = 0.0, min = 0.0;
    for (double v : p) {
        total += v;
        min = std::min(min, v);
    }
    CHECK(std::abs(total * g.dx() - 1.0) < 1e-8);
    CHECK(min >= -1e-10);
}

TEST_CASE("Bell-like state has purity one half and entropy ln 2") {
    const Grid1D g(-40.0, 40.0, 256);
    const ReducedDensityMatrix rho = partial_trace(bell_like(g, 12.0));
    const DecoherenceReport r = decoherence_report(rho, 4.0);
    CHECK(std::abs(r.purity - 0.5) < 1e-6);
    CHECK(std::abs(r.linear_entropy - 0.5) < 1e-6);
    CHECK(std::abs(r.von_neumann_entropy - std::numbers::ln2) < 1e-4);
    CHECK(r.min_eigenvalue > -1e-8);
}

TEST_CASE("partially correlated state is mixed") {
    const Grid1D g(-40.0, 40.0, 256);
    // Overlapping packets: the reduced state is mixed but not maximally.
    const ReducedDensityMatrix rho = partial_trace(bell_like(g, 1.0));
    const DecoherenceReport r = decoherence_report(rho, 4.0);
    CHECK(r.purity < 1.0 - 1e-6);
    CHECK(r.purity > 0.5);
    CHECK(r.von_neumann_entropy > 0.0);
}

TEST_CASE("coherent superposition keeps its off-diagonal band") {
    const Grid1D g(-40.0, 40.0, 256);
    const auto l = gaussian(g, -12.0, 1.0);
    const auto r = gaussian(g, 12.0, 1.0);
    ComplexField f(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = 0; j < g.n(); ++j) f(i, j) = (l[i] + r[i]) * (l[j] + r[j]);
    }
    normalise(f, g.dx());
    const DecoherenceReport rep = decoherence_report(partial_trace(MetaState(g, f)), 4.0);
    CHECK(std::abs(rep.purity - 1.0) < 1e-10);
    // Tracing the correlated version removes the inter-packet blocks, which
    // carry half of the band mass of the coherent state (each packet's own
    // tails beyond d_cut remain in both).
    const DecoherenceReport mixed = decoherence_report(partial_trace(bell_like(g, 12.0)), 4.0);
    double inter = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = 0; j < g.n(); ++j) {
            if (std::abs(g.x(i) - g.x(j)) > 4.0) inter += l[i] * r[j] + r[i] * l[j];
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i) total += (l[i] + r[i]) * (l[i] + r[i]);
    inter *= g.dx() / total;   // same normalisation as the coherent rho
    CHECK(rep.coherence_offdiag - mixed.coherence_offdiag == doctest::Approx(inter).epsilon(1e-6));
    CHECK(inter > 0.4);
}

TEST_CASE("non-normalised input is rejected") {
    const Grid1D g(-20.0, 20.0, 64);
    ComplexField f(g.n());
    const auto psi = gaussian(g, 0.0, 1.0);
    for (std::size_t i = 0; i < g.n(); ++i) {
        for (std::size_t j = 0; j < g.n(); ++j) f(i, j) = psi[i] * psi[j];
    }
    normalise(f, g.dx());
    for (cplx& z : f.values()) z *= 1.001;
    CHECK_THROWS_AS(partial_trace(MetaState(g, f)), ValidationError);
    CHECK_NOTHROW(partial_trace(MetaState(g, f), 1e-2));
}
