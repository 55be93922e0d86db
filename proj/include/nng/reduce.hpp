#pragma once

#include <limits>
#include <vector>

#include "nng/field.hpp"
#include "nng/grid.hpp"
#include "nng/meta_state.hpp"

namespace nng {

/// rho_P(x, x') after integrating out the hidden coordinate.
class ReducedDensityMatrix {
public:
    ReducedDensityMatrix(Grid1D grid, ComplexField rho, double time);

    const Grid1D& grid() const { return grid_; }
    const ComplexField& rho() const { return rho_; }
    double time() const { return time_; }

    // Riemann sum of the diagonal times dx.
    double trace() const;
    // max |rho - rho^dagger|
    double hermiticity_defect() const;

private:
    Grid1D grid_;
    ComplexField rho_;
    double time_;
};

struct DecoherenceReport {
    double purity = 1.0;
    double linear_entropy = 0.0;
    double von_neumann_entropy = 0.0;   // nats
    double coherence_offdiag = 0.0;
    double min_eigenvalue = 0.0;        // of rho dx
    bool spectrum_ok = true;            // false if the eigensolver failed
    std::vector<double> position_density;
};

// Default tolerance on |norm - 1| accepted by partial_trace.
inline constexpr double kNormTolerance = 1e-8;

/// rho_P(x, x') = sum_x~ Psi(x, x~) conj(Psi(x', x~)) dx~. Rejects states whose
/// squared norm is off by more than `norm_tolerance`; nothing is renormalized.
ReducedDensityMatrix partial_trace(const MetaState& state, double norm_tolerance = kNormTolerance);

/// Pr(X) = rho_P(X, X).
std::vector<double> position_probability(const ReducedDensityMatrix& rho);

/// Tr(rho^2) with grid weights, entropies from the spectrum of rho dx
/// (eigenvalues below 1e-12 are dropped from the p ln p sum), and the L1
/// mass sum |rho(x,x')| dx dx' over |x - x'| > d_cut.
DecoherenceReport decoherence_report(const ReducedDensityMatrix& rho, double d_cut);

// Cheaper purity-only path used by scans.
double purity(const ReducedDensityMatrix& rho);

/// Pr(X) to first order in the pair coupling:
/// sum_x~ [|Psi0|^2 + 2 Re(Psi0 conj(Psi1))] dx~.
std::vector<double> first_order_probability(const MetaState& psi0, const MetaState& psi1);

} // namespace nng
