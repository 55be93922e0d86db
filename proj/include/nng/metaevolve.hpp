#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nng/external_potential.hpp"
#include "nng/fft.hpp"
#include "nng/gravpotential.hpp"
#include "nng/meta_state.hpp"
#include "nng/reduce.hpp"

namespace nng {

enum class Boundary { periodic, absorbing };

/// Time stepping for the pair Hamiltonian
///   H = T(x) + T(x~) + V_ext(x) + V_ext(x~) + V_G(|x - x~|).
///
/// The absorbing boundary is an imaginary potential -i hbar Gamma(x) on each
/// coordinate with Gamma(x) = mask_strength * cos^2(pi s / (2 w)), where s is
/// the distance to the nearest grid edge and w = mask_width * L. Gamma is zero
/// for s >= w.
struct EvolutionConfig {
    double dt = 0.0;
    std::size_t steps = 0;
    Boundary boundary = Boundary::periodic;
    double mask_width = 0.1;       // fraction of the domain, in (0, 0.25)
    double mask_strength = 0.0;    // 1/time
    std::size_t record_every = 0;  // 0: record only the start and the end
    bool observe = true;           // compute reduced observables at records
    bool keep_snapshots = false;
    double d_cut = 4.0;            // coherence band cut for the reports

    void validate() const;
};

// dt * E_kin_max / hbar with E_kin_max = hbar^2 k_max^2 / (2m).
double cfl_number(const Grid1D& grid, double hbar, double mass, double dt);
// Largest per-step norm increase attributed to rounding. A 512^2 sum of
// squares carries about 1e-15 relative error.
inline constexpr double kNormRoundoff = 1e-13;

inline constexpr double kCflLimit = 0.7853981633974483;   // pi / 4
// Largest dt satisfying the CFL bound.
double cfl_dt_bound(const Grid1D& grid, double hbar, double mass);

struct SnapshotSummary {
    double time = 0.0;
    double norm = 0.0;
    double trace = 0.0;
    double hermiticity = 0.0;
    double exchange_asymmetry = 0.0;
    DecoherenceReport report;
};

struct EvolutionRecord {
    std::vector<double> times;
    std::vector<double> norms;
    std::vector<MetaState> snapshots;
    std::vector<SnapshotSummary> observables;
    double max_step_norm_drift = 0.0;   // max |norm_{k+1} - norm_k|
    double max_step_norm_increase = 0.0;   // max (norm_{k+1} - norm_k), 0 if never
    std::optional<MetaState> final_state;
};

/// Strang-split propagator: half potential phase, full kinetic step in the
/// conjugate basis of both coordinates, half potential phase.
class MetaPropagator {
public:
    MetaPropagator(const Grid1D& grid, const ExternalPotential& external, const PairPotential& pair,
                   const EvolutionConfig& cfg, bool include_pair = true);

    void step(ComplexField& psi);

    // Pieces used by the Dyson engine: exp(-i T dt/2), and the half-step
    // potential phase without the pair term.
    void half_kinetic(ComplexField& psi);
    const ComplexField& potential_half_phase() const { return potential_half_; }
    const ComplexField& pair_potential() const { return pair_values_; }

private:
    RowFft fft_;
    ComplexField potential_half_;
    ComplexField kinetic_full_;
    ComplexField kinetic_half_;
    ComplexField pair_values_;
    ComplexField scratch_;
};

EvolutionRecord evolve(MetaState state, const ExternalPotential& external, const PairPotential& pair,
                       const EvolutionConfig& cfg);

struct DysonTerms {
    MetaState psi0;   // pair-free evolution
    MetaState psi1;   // first-order correction
};

// |V_G(0)| * steps * dt / hbar, the a-priori bound on |S_G| / hbar.
double pair_action_estimate(const PairPotential& pair, const EvolutionConfig& cfg);
inline constexpr double kDysonActionLimit = 0.1;

/// psi1 = -(i/hbar) sum_k U0(t_b, t_k) V_G U0(t_k, t_a) psi dt with t_k at
/// step midpoints. U0 uses the same Strang factors as evolve without the pair
/// term, so psi0 matches evolve at zero coupling.
DysonTerms dyson_first_order(const MetaState& state0, const ExternalPotential& external,
                             const PairPotential& pair, const EvolutionConfig& cfg);

} // namespace nng
