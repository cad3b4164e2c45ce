#pragma once

// Concurrence of the two fictitious spins: pure-state formula, closed form
// for the ground state, Gibbs states and the Wootters mixed-state measure.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "qspin/error.hpp"
#include "qspin/linalg.hpp"
#include "qspin/model.hpp"
#include "qspin/pauli.hpp"

namespace qspin {

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kDensityEigenFloor = -1e-10;
inline constexpr double kNormalizationTolerance = 1e-10;
/// Density-matrix eigenvalues at or below this are rounding noise (trace 1).
inline constexpr double kSpectralNoiseFloor = 1e-14;

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
class DensityMatrix {
public:
    static DensityMatrix from_matrix(const ComplexMat4& rho) {
        if (!rho.all_finite()) throw Error(ErrorKind::InvalidState, "non-finite entries");
        if (hermiticity_defect(rho) > kHermitianTolerance)
            throw Error(ErrorKind::InvalidState, "density matrix is not Hermitian");
        const Complex tr = rho.trace();
        if (std::abs(tr - 1.0) > kTraceTolerance)
            throw Error(ErrorKind::InvalidState, "density matrix trace differs from 1");
        if (herm_eigensolve(rho).values.front() < kDensityEigenFloor)
            throw Error(ErrorKind::InvalidState, "density matrix has a negative eigenvalue");
        return DensityMatrix(hermitian_part(rho));
    }

    static DensityMatrix pure(const Vector<4>& psi) {
        const double n2 = std::real(inner(psi, psi));
        if (std::abs(n2 - 1.0) > kNormalizationTolerance)
            throw Error(ErrorKind::NotNormalized, "state vector is not normalized");
        return DensityMatrix(outer(psi, psi));
    }

    static DensityMatrix maximally_mixed() { return DensityMatrix(0.25 * ComplexMat4::identity()); }

    const ComplexMat4& matrix() const { return rho_; }

    double purity() const { return (rho_ * rho_).trace().real(); }

private:
    explicit DensityMatrix(const ComplexMat4& rho) : rho_(rho) {}
    ComplexMat4 rho_;
};

struct WoottersResult {
    double concurrence = 0.0;
    std::array<double, 4> lambdas{};  // descending
};

/// 2 |a+ a- - b+ b-|
inline double pure_concurrence(const GroundAmplitudes& g) {
    if (std::abs(g.norm_squared() - 1.0) > kNormalizationTolerance)
        throw Error(ErrorKind::NotNormalized, "amplitudes are not normalized");
    return std::min(1.0, 2.0 * std::abs(g.a_plus * g.a_minus - g.b_plus * g.b_minus));
}

/// (6 + alpha) / sqrt(36 + 4 alpha (3 + alpha) - 6 alpha eta + 3 eta^2).
/// Not defined at alpha = 0, where the ground doublet is degenerate and the
/// system carries no entanglement.
inline double closed_form_concurrence(const ModelParams& p) {
    if (!(p.alpha > 0.0))
        throw Error(ErrorKind::DegenerateGround,
                    "ground state is degenerate at alpha = 0; pure NQR has no entanglement (C = 0)");
    return std::min(1.0, (6.0 + p.alpha) / ground_radical(p.alpha, p.eta));
}

struct FlaggedConcurrence {
    double value = 0.0;
    bool degenerate = false;
};

/// Total version of closed_form_concurrence: 0 with the flag set at alpha = 0.
inline FlaggedConcurrence concurrence_or_degenerate(const ModelParams& p) {
    if (!(p.alpha > 0.0)) return {0.0, true};
    return {closed_form_concurrence(p), false};
}

/// exp(-beta H) / Z, with the ground energy subtracted before exponentiating.
inline DensityMatrix thermal_state(const ModelParams& p) {
    if (!std::isfinite(p.beta) || p.beta < 0.0)
        throw Error(ErrorKind::InvalidArgument, "beta must be finite and >= 0");
    if (p.beta == 0.0) return DensityMatrix::maximally_mixed();
    const auto spec = herm_eigensolve(hamiltonian_two_qubit(p));
    const double e0 = spec.values.front();
    double z = 0.0;
    for (double e : spec.values) z += std::exp(-p.beta * (e - e0));
    return DensityMatrix::from_matrix(
        spec.apply([&](double e) { return std::exp(-p.beta * (e - e0)) / z; }));
}

/// Wootters concurrence. With rho = F F^dagger, F = V sqrt(D), the nonzero
/// eigenvalues of rho (Y(x)Y) conj(rho) (Y(x)Y) coincide with those of the
/// Hermitian matrix M M^dagger, M = F^T (Y(x)Y) F. Eigenvalues of rho at the
/// rounding-noise level are set to zero first: their square roots (~1e-8)
/// would otherwise leak into the spin-flip spectrum of rank-deficient states.
inline WoottersResult wootters_concurrence(const DensityMatrix& d) {
    const auto rho_spec = herm_eigensolve(d.matrix());
    ComplexMat4 factor;
    for (std::size_t k = 0; k < 4; ++k) {
        const double w = rho_spec.values[k];
        if (w < kDensityEigenFloor)
            throw Error(ErrorKind::InvalidState, "density matrix has a negative eigenvalue");
        const double root = w > kSpectralNoiseFloor ? std::sqrt(w) : 0.0;
        for (std::size_t i = 0; i < 4; ++i) factor(i, k) = rho_spec.vectors(i, k) * root;
    }
    const ComplexMat4& yy = basis_element(Pauli::Y, Pauli::Y);
    ComplexMat4 factor_t;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) factor_t(i, j) = factor(j, i);
    const ComplexMat4 m = factor_t * yy * factor;
    const auto spec = herm_eigensolve(hermitian_part(m * m.adjoint()));

    WoottersResult out;
    for (std::size_t k = 0; k < 4; ++k) {
        const double mu = spec.values[3 - k];
        if (mu < kDensityEigenFloor)
            throw Error(ErrorKind::InvalidState, "spin-flip spectrum has a negative eigenvalue");
        out.lambdas[k] = mu > 0.0 ? std::sqrt(mu) : 0.0;
    }
    const double c = out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3];
    out.concurrence = std::clamp(c, 0.0, 1.0);
    return out;
}

inline double thermal_concurrence(const ModelParams& p) {
    return wootters_concurrence(thermal_state(p)).concurrence;
}

}  // namespace qspin
