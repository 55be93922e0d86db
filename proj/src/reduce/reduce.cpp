#include "nng/reduce.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

#include "nng/errors.hpp"
#include "nng/kernels.hpp"

namespace nng {

ReducedDensityMatrix::ReducedDensityMatrix(Grid1D grid, ComplexField rho, double time)
    : grid_(std::move(grid)), rho_(std::move(rho)), time_(time) {
    if (rho_.n() != grid_.n()) throw ValidationError("density matrix size does not match the grid");
}

double ReducedDensityMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < rho_.n(); ++i) t += rho_(i, i).real();
    return t * grid_.dx();
}

double ReducedDensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rho_.n(); ++i) {
        for (std::size_t j = i; j < rho_.n(); ++j) {
            worst = std::max(worst, std::abs(rho_(i, j) - std::conj(rho_(j, i))));
        }
    }
    return worst;
}

ReducedDensityMatrix partial_trace(const MetaState& state, double norm_tolerance) {
    const double norm = state.norm_squared();
    if (!(std::abs(norm - 1.0) <= norm_tolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "partial_trace: meta-state squared norm " << norm << " differs from 1 by more than "
            << norm_tolerance;
        throw ValidationError(msg.str());
    }
    ComplexField rho;
    kernels::partial_trace(state.amplitudes(), state.grid().dx(), rho);
    return ReducedDensityMatrix(state.grid(), std::move(rho), state.time());
}

std::vector<double> position_probability(const ReducedDensityMatrix& rho) {
    std::vector<double> p(rho.grid().n());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = rho.rho()(i, i).real();
    return p;
}

double purity(const ReducedDensityMatrix& rho) {
    const ComplexField& r = rho.rho();
    const double dx = rho.grid().dx();
    return kernels::norm_squared(r, dx * dx);
}

DecoherenceReport decoherence_report(const ReducedDensityMatrix& rho, double d_cut) {
    const Grid1D& grid = rho.grid();
    const std::size_t n = grid.n();
    const double dx = grid.dx();
    DecoherenceReport report;
    report.purity = purity(rho);
    report.linear_entropy = 1.0 - report.purity;
    report.position_density = position_probability(rho);

    double band = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(grid.x(i) - grid.x(j)) > d_cut) band += std::abs(rho.rho()(i, j));
        }
    }
    report.coherence_offdiag = band * dx * dx;

    using Matrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const Matrix> mapped(rho.rho().data(), static_cast<Eigen::Index>(n),
                                          static_cast<Eigen::Index>(n));
    const Matrix weighted = mapped * dx;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(weighted, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        report.spectrum_ok = false;
        report.von_neumann_entropy = std::numeric_limits<double>::quiet_NaN();
        report.min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    const auto& eigenvalues = solver.eigenvalues();
    report.min_eigenvalue = eigenvalues.minCoeff();
    double entropy = 0.0;
    for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
        const double p = eigenvalues[k];
        if (p > 1e-12) entropy -= p * std::log(p);
    }
    report.von_neumann_entropy = entropy;
    return report;
}

std::vector<double> first_order_probability(const MetaState& psi0, const MetaState& psi1) {
    if (!(psi0.grid() == psi1.grid())) throw ValidationError("Dyson terms live on different grids");
    const std::size_t n = psi0.grid().n();
    const double dx = psi0.grid().dx();
    std::vector<double> p(n);
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
        const auto a = psi0.amplitudes().row(i);
        const auto b = psi1.amplitudes().row(i);
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += std::norm(a[j]) + 2.0 * (a[j].real() * b[j].real() + a[j].imag() * b[j].imag());
        }
        p[i] = s * dx;
    }
    return p;
}

} // namespace nng
