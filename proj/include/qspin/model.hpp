#pragma once

// Spin-3/2 nucleus in an electric field gradient plus a transverse (x) field,
// written both directly and as two coupled fictitious spins 1/2.
//
// All energies are in units of the quadrupole frequency omega_Q, so
// alpha = omega_0 / omega_Q and the thermal exponent is -beta * H.
// Basis map: |3/2> <-> |00>, |1/2> <-> |01>, |-1/2> <-> |10>, |-3/2> <-> |11>.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "qspin/error.hpp"
#include "qspin/linalg.hpp"
#include "qspin/pauli.hpp"

namespace qspin {

inline const double kSqrt3 = std::sqrt(3.0);

/// `paper` uses the sigma_x (x) sigma_0 coefficient as printed ((sqrt3/2) eta);
/// `exact` uses the coefficient obtained by projecting the quadrupole
/// Hamiltonian onto the Pauli basis (sqrt3 eta).
enum class Mode { paper, exact };

constexpr std::string_view to_string(Mode m) { return m == Mode::paper ? "paper" : "exact"; }

inline std::optional<Mode> parse_mode(std::string_view s) {
    if (s == "paper") return Mode::paper;
    if (s == "exact") return Mode::exact;
    return std::nullopt;
}

struct ModelParams {
    double alpha = 0.0;  // omega_0 / omega_Q
    double eta = 0.0;    // asymmetry, [0, 1]
    double beta = 0.0;   // omega_Q / (k_B T)
    Mode mode = Mode::paper;
    std::optional<double> omega_q_mhz;  // only for dimensional output

    void validate() const {
        if (!std::isfinite(alpha) || alpha < 0.0)
            throw Error(ErrorKind::InvalidArgument, "alpha must be finite and >= 0");
        if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0)
            throw Error(ErrorKind::InvalidArgument, "eta must lie in [0, 1]");
        if (!std::isfinite(beta) || beta < 0.0)
            throw Error(ErrorKind::InvalidArgument, "beta must be finite and >= 0");
        if (omega_q_mhz && !(*omega_q_mhz > 0.0))
            throw Error(ErrorKind::InvalidArgument, "omega_q_mhz must be > 0");
    }
};

/// Coefficients of jx XX + jy YY + jz ZZ + h01 X0 + h02 0X, units omega_Q.
struct CouplingConstants {
    double jx, jy, jz, h01, h02;
};

inline CouplingConstants coupling_constants(const ModelParams& p) {
    const double h01 = p.mode == Mode::paper ? 0.5 * kSqrt3 * p.eta : kSqrt3 * p.eta;
    return {0.5 * p.alpha, 0.5 * p.alpha, 3.0, h01, 0.5 * kSqrt3 * p.alpha};
}

struct SpinOperators {
    ComplexMat4 ix, iy, iz;
};

/// Spin-3/2 matrices in the |3/2>, |1/2>, |-1/2>, |-3/2> basis (Condon-Shortley phases).
inline const SpinOperators& spin32_operators() {
    static const SpinOperators ops = [] {
        constexpr std::array<double, 4> m{1.5, 0.5, -0.5, -1.5};
        ComplexMat4 raise;  // I+ |m> = sqrt(I(I+1) - m(m+1)) |m+1>
        for (std::size_t k = 1; k < 4; ++k) raise(k - 1, k) = std::sqrt(3.75 - m[k] * (m[k] + 1.0));
        const ComplexMat4 lower = raise.adjoint();
        return SpinOperators{
            0.5 * (raise + lower),
            (raise - lower) * Complex(0.0, -0.5),
            ComplexMat4::diagonal(m),
        };
    }();
    return ops;
}

/// omega_Q [3 Iz^2 - I^2 + eta (Ix^2 - Iy^2)] + alpha Ix, in units omega_Q.
inline ComplexMat4 hamiltonian_spin32(const ModelParams& p) {
    const auto& s = spin32_operators();
    const ComplexMat4 total = s.ix * s.ix + s.iy * s.iy + s.iz * s.iz;
    return 3.0 * (s.iz * s.iz) - total + p.eta * (s.ix * s.ix - s.iy * s.iy) + p.alpha * s.ix;
}

inline ComplexMat4 hamiltonian_two_qubit(const ModelParams& p) {
    const auto k = coupling_constants(p);
    return k.jz * basis_element(Pauli::Z, Pauli::Z) + k.h01 * basis_element(Pauli::X, Pauli::I) +
           k.h02 * basis_element(Pauli::I, Pauli::X) + k.jx * basis_element(Pauli::X, Pauli::X) +
           k.jy * basis_element(Pauli::Y, Pauli::Y);
}

inline ComplexMat4 hamiltonian(const ModelParams& p) { return hamiltonian_two_qubit(p); }

/// Closed-form spectrum of the paper-mode Hamiltonian, ascending. H commutes
/// with sigma_x (x) sigma_x, and each parity sector is a 2x2 block:
///   odd:  1/2 (-alpha -+ sqrt(4 alpha^2 + 6 alpha (2 - eta) + 36 + 3 eta^2))
///   even: 1/2 ( alpha -+ sqrt(4 alpha^2 - 6 alpha (2 - eta) + 36 + 3 eta^2))
inline std::array<double, 4> analytic_energies(const ModelParams& p) {
    if (p.mode != Mode::paper)
        throw Error(ErrorKind::ModeUnsupported, "closed-form energies exist for paper mode only");
    const double a = p.alpha, e = p.eta;
    const double r_odd = std::sqrt(4.0 * a * a + 6.0 * a * (2.0 - e) + 36.0 + 3.0 * e * e);
    const double r_even = std::sqrt(4.0 * a * a - 6.0 * a * (2.0 - e) + 36.0 + 3.0 * e * e);
    std::array<double, 4> E{0.5 * (-a - r_odd), 0.5 * (-a + r_odd), 0.5 * (a - r_even),
                            0.5 * (a + r_even)};
    std::sort(E.begin(), E.end());
    return E;
}

/// The energy-level formulas exactly as typeset, in the order
/// E_{+3/2}, E_{-3/2}, E_{+1/2}, E_{-1/2}. Kept for the consistency report;
/// they do not match the spectrum of either Hamiltonian.
inline std::array<double, 4> printed_eq11_energies(const ModelParams& p) {
    const double a = p.alpha, e = p.eta;
    const double r32 = std::sqrt(4.0 * a * a - 6.0 * a * (2.0 - e) + (12.0 + e * e));
    const double r12 = std::sqrt(4.0 * a * a + 6.0 * a * (2.0 - e) + (12.0 + e * e));
    return {0.5 * (-a - r32), 0.5 * (-a + r32), 0.5 * (a - r12), 0.5 * (a + r12)};
}

/// Ground-state amplitudes as printed: |Phi> = a- |00> + b+ |01> + b- |10> + a+ |11>.
struct GroundAmplitudes {
    double a_minus = 0.0;
    double b_plus = 0.0;
    double b_minus = 0.0;
    double a_plus = 0.0;
    double d = 1.0;

    Vector<4> state() const { return {a_minus, b_plus, b_minus, a_plus}; }
    double norm_squared() const {
        return a_minus * a_minus + b_plus * b_plus + b_minus * b_minus + a_plus * a_plus;
    }
};

/// sqrt(36 + 4 alpha (3 + alpha) - 6 alpha eta + 3 eta^2)
inline double ground_radical(double alpha, double eta) {
    return std::sqrt(36.0 + 4.0 * alpha * (3.0 + alpha) - 6.0 * alpha * eta + 3.0 * eta * eta);
}

inline GroundAmplitudes ground_amplitudes(const ModelParams& p) {
    if (!(p.alpha > 0.0))
        throw Error(ErrorKind::DegenerateGround,
                    "ground state is degenerate at alpha = 0 (pure NQR, no entanglement)");
    const double a = p.alpha, e = p.eta;
    const double num_a = kSqrt3 * (a - e);
    const double num_b = 6.0 + a + ground_radical(a, e);
    const double d = std::sqrt(6.0 * (a - e) * (a - e) + 2.0 * num_b * num_b);
    return {num_a / d, num_b / d, -num_b / d, -num_a / d, d};
}

struct ResonanceFrequencies {
    double omega1 = 0.0;  // first fictitious spin, units omega_Q
    double omega2 = 0.0;  // second fictitious spin, units omega_Q
    std::optional<double> omega1_mhz;
    std::optional<double> omega2_mhz;
};

inline ResonanceFrequencies resonance_frequencies(const ModelParams& p) {
    ResonanceFrequencies f{kSqrt3 * p.eta, kSqrt3 * p.alpha, std::nullopt, std::nullopt};
    if (p.omega_q_mhz) {
        f.omega1_mhz = f.omega1 * *p.omega_q_mhz;
        f.omega2_mhz = f.omega2 * *p.omega_q_mhz;
    }
    return f;
}

/// 2 |psi_00 psi_11 - psi_01 psi_10| for a normalized two-qubit pure state.
inline double pure_state_concurrence(const Vector<4>& psi) {
    return std::min(1.0, 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]));
}

/// Numerical cross-checks of the printed formulas against the paper-mode
/// Hamiltonian.
struct ConsistencyReport {
    double hq_eta_coeff_exact = 0.0;    // sigma_x (x) sigma_0 coefficient from projection
    double hq_eta_coeff_printed = 0.0;  // same, as printed
    std::array<double, 4> eq11_printed_energies{};  // ascending
    std::array<double, 4> numeric_energies{};       // ascending
    double max_energy_mismatch = 0.0;
    double eq12_state_overlap = 0.0;  // |<psi_numeric|Phi_printed>|
    double eq12_gauge_overlap = 0.0;  // same after sigma_z (x) sigma_z on Phi_printed
    double eq15_concurrence_mismatch = 0.0;
};

inline ConsistencyReport consistency_report(const ModelParams& p) {
    if (!(p.alpha > 0.0))
        throw Error(ErrorKind::DegenerateGround, "consistency report needs alpha > 0");
    ModelParams paper = p;
    paper.mode = Mode::paper;

    ConsistencyReport r;
    const auto projected = decompose(hamiltonian_spin32(p))[{Pauli::X, Pauli::I}];
    r.hq_eta_coeff_exact = projected.real();
    r.hq_eta_coeff_printed = 0.5 * kSqrt3 * p.eta;

    const auto spec = herm_eigensolve(hamiltonian_two_qubit(paper));
    r.numeric_energies = spec.values;
    r.eq11_printed_energies = printed_eq11_energies(paper);
    std::sort(r.eq11_printed_energies.begin(), r.eq11_printed_energies.end());
    for (std::size_t k = 0; k < 4; ++k)
        r.max_energy_mismatch = std::max(
            r.max_energy_mismatch, std::abs(r.eq11_printed_energies[k] - r.numeric_energies[k]));

    const auto ground = spec.vector(0);
    const auto phi = ground_amplitudes(paper).state();
    r.eq12_state_overlap = std::min(1.0, std::abs(inner(ground, phi)));
    const auto phi_gauge = basis_element(Pauli::Z, Pauli::Z) * phi;
    r.eq12_gauge_overlap = std::min(1.0, std::abs(inner(ground, phi_gauge)));

    const double c15 = (6.0 + p.alpha) / ground_radical(p.alpha, p.eta);
    r.eq15_concurrence_mismatch = std::abs(c15 - pure_state_concurrence(ground));
    return r;
}

}  // namespace qspin
