#pragma once

// Self-check suite over the library's algebraic and physical invariants.
// Each check reports the worst deviation it saw against its tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "qspin/entanglement.hpp"
#include "qspin/linalg.hpp"
#include "qspin/model.hpp"
#include "qspin/pauli.hpp"
#include "qspin/random.hpp"
#include "qspin/scan.hpp"

namespace qspin {

struct CheckResult {
    std::string name;
    bool passed = false;
    double worst = 0.0;      // largest deviation observed
    double tolerance = 0.0;  // pass iff worst <= tolerance
};

namespace detail {

inline CheckResult make_check(std::string name, double worst, double tol) {
    return {std::move(name), worst <= tol, worst, tol};
}

inline std::vector<ModelParams> parameter_grid(std::size_t na, std::size_t ne, double amax, Mode mode) {
    std::vector<ModelParams> out;
    for (std::size_t i = 1; i <= na; ++i)
        for (std::size_t j = 0; j < ne; ++j)
            out.push_back({amax * static_cast<double>(i) / static_cast<double>(na),
                           static_cast<double>(j) / static_cast<double>(ne - 1), 0.0, mode, {}});
    return out;
}

}  // namespace detail

inline std::vector<CheckResult> run_invariant_suite(std::uint64_t seed = 20240601) {
    rnd::Engine g(seed);
    std::vector<CheckResult> out;

    {
        double worst = 0.0;
        for (std::size_t k = 0; k < 16; ++k)
            for (std::size_t l = 0; l < 16; ++l) {
                const Complex t = (basis_element(PauliIndex::from_flat(k)) *
                                   basis_element(PauliIndex::from_flat(l)))
                                      .trace();
                worst = std::max(worst, std::abs(t - (k == l ? 4.0 : 0.0)));
            }
        out.push_back(detail::make_check("pauli orthonormality Tr(BkBl)=4delta", worst, 0.0));
    }
    {
        double worst = 0.0, imag = 0.0;
        for (int t = 0; t < 200; ++t) {
            const auto m = rnd::hermitian<4>(g);
            const auto c = decompose(m);
            worst = std::max(worst, (reconstruct(c) - m).max_abs());
            imag = std::max(imag, c.max_imag());
        }
        out.push_back(detail::make_check("pauli reconstruct(decompose(m)) = m", worst, 1e-12));
        out.push_back(detail::make_check("pauli coefficients real for Hermitian m", imag, 1e-12));
    }
    {
        double recon = 0.0, trace = 0.0, ortho = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const auto m = rnd::hermitian<4>(g);
            const auto s = herm_eigensolve(m);
            recon = std::max(recon, (s.apply([](double x) { return x; }) - m).max_abs());
            double sum = 0.0;
            for (double v : s.values) sum += v;
            trace = std::max(trace, std::abs(sum - m.trace().real()));
            ortho = std::max(ortho, (s.vectors.adjoint() * s.vectors - ComplexMat4::identity()).max_abs());
        }
        out.push_back(detail::make_check("eigensolver reconstruction", recon, 1e-9));
        out.push_back(detail::make_check("eigensolver trace preservation", trace, 1e-10));
        out.push_back(detail::make_check("eigensolver orthonormal vectors", ortho, 1e-10));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 200; ++t) {
            const auto m = rnd::hermitian<4>(g);
            worst = std::max(worst, commutator(mat_exp_hermitian(m), m).max_abs());
        }
        out.push_back(detail::make_check("exp(m) commutes with m", worst, 1e-9));
    }
    {
        double worst = 0.0;
        std::uniform_int_distribution<int> pick(0, 3);
        for (int t = 0; t < 200; ++t) {
            const auto& a = pauli_matrix(kPaulis[pick(g)]);
            const auto& b = pauli_matrix(kPaulis[pick(g)]);
            const auto& c = pauli_matrix(kPaulis[pick(g)]);
            const auto& d = pauli_matrix(kPaulis[pick(g)]);
            worst = std::max(worst, (kron2(a, b) * kron2(c, d) - kron2(a * c, b * d)).max_abs());
        }
        out.push_back(detail::make_check("kron mixed-product property", worst, 0.0));
    }
    {
        const auto& s = spin32_operators();
        const double comm = (commutator(s.ix, s.iy) - Complex(0.0, 1.0) * s.iz).max_abs();
        const double casimir =
            (s.ix * s.ix + s.iy * s.iy + s.iz * s.iz - 3.75 * ComplexMat4::identity()).max_abs();
        out.push_back(detail::make_check("spin-3/2 [Ix,Iy] = i Iz", comm, 1e-14));
        out.push_back(detail::make_check("spin-3/2 I^2 = 15/4", casimir, 1e-14));
    }

    const auto exact_grid = detail::parameter_grid(20, 20, 5.0, Mode::exact);
    const auto paper_grid = detail::parameter_grid(20, 20, 5.0, Mode::paper);
    {
        double worst = 0.0;
        for (const auto& p : exact_grid)
            worst = std::max(worst, (hamiltonian_two_qubit(p) - hamiltonian_spin32(p)).max_abs());
        out.push_back(detail::make_check("exact-mode two-qubit H == spin-3/2 H", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (const auto& p : paper_grid) {
            ModelParams half = p;
            half.mode = Mode::exact;
            half.eta = 0.5 * p.eta;
            worst = std::max(worst, (hamiltonian_two_qubit(p) - hamiltonian_two_qubit(half)).max_abs());
        }
        out.push_back(detail::make_check("paper H(eta) == exact H(eta/2)", worst, 1e-12));
    }
    {
        double comm = 0.0, trace = 0.0, parity = 0.0, energies = 0.0;
        const auto& xx = basis_element(Pauli::X, Pauli::X);
        for (const auto* grid : {&exact_grid, &paper_grid})
            for (const auto& p : *grid) {
                const auto h = hamiltonian_two_qubit(p);
                comm = std::max(comm, commutator(h, xx).max_abs());
                const auto s = herm_eigensolve(h);
                double sum = 0.0;
                for (double v : s.values) sum += v;
                trace = std::max({trace, std::abs(h.trace()), std::abs(sum)});
                if (p.mode == Mode::paper) {
                    const auto v = s.vector(0);
                    parity = std::max(parity, std::abs(inner(v, xx * v) + 1.0));
                    const auto e = analytic_energies(p);
                    for (std::size_t k = 0; k < 4; ++k)
                        energies = std::max(energies, std::abs(e[k] - s.values[k]));
                }
            }
        out.push_back(detail::make_check("[H, XX] = 0", comm, 1e-14));
        out.push_back(detail::make_check("Tr H = sum of eigenvalues = 0", trace, 1e-10));
        out.push_back(detail::make_check("ground state in odd XX sector", parity, 1e-9));
        out.push_back(detail::make_check("analytic energies = eigensolver", energies, 1e-10));
    }
    {
        double worst = 0.0;
        for (const auto& p : paper_grid) {
            const double c15 = closed_form_concurrence(p);
            worst = std::max(worst, std::abs(c15 - pure_concurrence(ground_amplitudes(p))));
        }
        out.push_back(detail::make_check("closed form = pure formula on amplitudes", worst, 1e-9));
    }
    {
        double worst = 0.0;
        for (int t = 0; t < 500; ++t) {
            const auto psi = rnd::real_state(g);
            const double pure = 2.0 * std::abs(psi[3].real() * psi[0].real() - psi[1].real() * psi[2].real());
            const double w = wootters_concurrence(DensityMatrix::pure(psi)).concurrence;
            worst = std::max(worst, std::abs(w - std::min(1.0, pure)));
        }
        out.push_back(detail::make_check("Wootters = pure formula on random states", worst, 1e-9));
    }
    {
        double worst = 0.0, range = 0.0;
        for (int t = 0; t < 200; ++t) {
            std::uniform_real_distribution<double> ua(0.0, 5.0), ue(0.0, 1.0), ub(0.0, 5.0);
            const ModelParams p{ua(g), ue(g), ub(g), Mode::paper, {}};
            const auto rho = thermal_state(p).matrix();
            const auto u = kron2(rnd::unitary2(g), rnd::unitary2(g));
            const auto rotated = DensityMatrix::from_matrix(hermitian_part(u * rho * u.adjoint()));
            const double c0 = wootters_concurrence(thermal_state(p)).concurrence;
            const double c1 = wootters_concurrence(rotated).concurrence;
            worst = std::max(worst, std::abs(c0 - c1));
            range = std::max({range, -c0, c0 - 1.0});
        }
        out.push_back(detail::make_check("Wootters local-unitary invariance", worst, 1e-9));
        out.push_back(detail::make_check("concurrence within [0, 1]", std::max(range, 0.0), 0.0));
    }
    {
        double worst = 0.0;
        for (double a : {0.5, 1.0, 2.0, 4.0}) {
            const ModelParams p{a, 0.14, 200.0, Mode::paper, {}};
            worst = std::max(worst, std::abs(thermal_concurrence(p) - closed_form_concurrence(p)));
        }
        const double at_zero = thermal_concurrence({1.0, 0.14, 0.0, Mode::paper, {}});
        out.push_back(detail::make_check("C_T(large beta) -> closed form", worst, 1e-6));
        out.push_back(detail::make_check("C_T(beta = 0) = 0", at_zero, 0.0));
    }
    {
        const double c = thermal_concurrence({1e3, 0.14, 4.0, Mode::paper, {}});
        out.push_back(detail::make_check("high-field C_T(1e3, 0.14, 4) in [0.49, 0.51]",
                                         std::abs(c - 0.5), 0.01));
    }
    return out;
}

}  // namespace qspin
