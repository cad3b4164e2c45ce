#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "oracles.hpp"
#include "qspin/entanglement.hpp"
#include "qspin/random.hpp"

using namespace qspin;
using Catch::Approx;

namespace {

ModelParams params(double alpha, double eta, double beta = 0.0, Mode mode = Mode::paper) {
    return {alpha, eta, beta, mode, std::nullopt};
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
    try {
        f();
        FAIL("expected " << to_string(kind));
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST_CASE("pure_concurrence", "[entanglement][pure]") {
    CHECK(pure_concurrence({kInvSqrt2, 0, 0, kInvSqrt2, 1}) == Approx(1.0).margin(1e-15));
    CHECK(pure_concurrence({1, 0, 0, 0, 1}) == 0.0);
    CHECK(pure_concurrence(ground_amplitudes(params(1, 0))) == Approx(7.0 / std::sqrt(52.0)).margin(1e-12));
    CHECK(pure_concurrence(ground_amplitudes(params(1, 0))) == Approx(0.97072).margin(1e-5));
    expect_error(ErrorKind::NotNormalized, [] { pure_concurrence({1, 1, 0, 0, 1}); });
}

TEST_CASE("closed_form_concurrence", "[entanglement][closed]") {
    CHECK(closed_form_concurrence(params(1e-9, 0)) == Approx(1.0).margin(1e-9));
    CHECK(closed_form_concurrence(params(1, 1)) == 1.0);
    CHECK(closed_form_concurrence(params(1e4, 0.14)) == Approx(0.5).margin(5e-4));
    CHECK(closed_form_concurrence(params(1e-12, 1)) == Approx(1.0 / std::sqrt(1.0 + 1.0 / 12.0)).margin(1e-9));
    CHECK(closed_form_concurrence(params(1e-12, 1)) == Approx(0.96077).margin(1e-5));
    expect_error(ErrorKind::DegenerateGround, [] { closed_form_concurrence(params(0, 0.5)); });

    const auto flagged = concurrence_or_degenerate(params(0, 0.5));
    CHECK(flagged.degenerate);
    CHECK(flagged.value == 0.0);
    CHECK_FALSE(concurrence_or_degenerate(params(2, 0.5)).degenerate);

    for (int i = 1; i <= 30; ++i)
        for (int j = 0; j <= 10; ++j) {
            const auto p = params(i / 6.0, j / 10.0);
            REQUIRE(std::abs(closed_form_concurrence(p) - pure_concurrence(ground_amplitudes(p))) <= 1e-9);
        }
}

TEST_CASE("thermal_state", "[entanglement][thermal]") {
    CHECK(thermal_state(params(1, 0.14, 0)).matrix() == 0.25 * ComplexMat4::identity());

    SECTION("low temperature approaches the ground projector") {
        const auto p = params(1, 0, 50);
        const auto v = herm_eigensolve(hamiltonian_two_qubit(p)).vector(0);
        CHECK((thermal_state(p).matrix() - outer(v, v)).max_abs() <= 1e-9);
    }
    SECTION("finite temperature is mixed") {
        const auto rho = thermal_state(params(1, 0.14, 1));
        CHECK(rho.matrix().trace().real() == Approx(1.0).margin(1e-12));
        CHECK(rho.purity() < 1.0);
    }
    SECTION("matches the Taylor-series Gibbs state") {
        for (double beta : {0.3, 1.0, 4.0, 20.0}) {
            const auto p = params(2.0, 0.5, beta);
            const auto ref = oracle::from_eigen(oracle::gibbs(hamiltonian_two_qubit(p), beta));
            REQUIRE((thermal_state(p).matrix() - ref).max_abs() <= 1e-12);
        }
    }
    SECTION("large beta * alpha does not overflow") {
        const auto rho = thermal_state(params(1e3, 0.14, 40));
        CHECK(rho.matrix().all_finite());
        CHECK(rho.matrix().trace().real() == Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("DensityMatrix validation", "[entanglement][state]") {
    expect_error(ErrorKind::InvalidState, [] { DensityMatrix::from_matrix(ComplexMat4::identity()); });
    expect_error(ErrorKind::InvalidState,
                 [] { DensityMatrix::from_matrix(ComplexMat4::diagonal({1.5, -0.5, 0, 0})); });
    ComplexMat4 skew = 0.25 * ComplexMat4::identity();
    skew(0, 1) = 0.1;
    expect_error(ErrorKind::InvalidState, [&] { DensityMatrix::from_matrix(skew); });
    expect_error(ErrorKind::NotNormalized, [] { DensityMatrix::pure({1.0, 1.0, 0.0, 0.0}); });
}

TEST_CASE("wootters_concurrence", "[entanglement][wootters]") {
    SECTION("Bell state") {
        const auto r = wootters_concurrence(DensityMatrix::pure({kInvSqrt2, 0, 0, kInvSqrt2}));
        CHECK(r.concurrence == Approx(1.0).margin(1e-12));
        CHECK(r.lambdas[0] == Approx(1.0).margin(1e-12));
        for (int k = 1; k < 4; ++k) CHECK(r.lambdas[k] == Approx(0.0).margin(1e-7));
    }
    SECTION("maximally mixed") {
        const auto r = wootters_concurrence(DensityMatrix::maximally_mixed());
        CHECK(r.concurrence == 0.0);
        for (double l : r.lambdas) CHECK(l == Approx(0.25).margin(1e-15));
    }
    SECTION("printed ground state") {
        const auto g = ground_amplitudes(params(1, 0));
        CHECK(wootters_concurrence(DensityMatrix::pure(g.state())).concurrence ==
              Approx(7.0 / std::sqrt(52.0)).margin(1e-9));
    }
    SECTION("zero field is separable") {
        CHECK(thermal_concurrence(params(0, 0.14, 5)) == 0.0);
        CHECK(thermal_concurrence(params(0, 0.14, 50)) == 0.0);
    }
    SECTION("agrees with the non-Hermitian product route") {
        // Frozen values from an independent numpy/scipy evaluation.
        CHECK(thermal_concurrence(params(1, 0.14, 1)) == Approx(0.7254308817188415).margin(1e-9));
        CHECK(thermal_concurrence(params(2, 0.14, 2)) == Approx(0.9263341709589272).margin(1e-9));
        CHECK(thermal_concurrence(params(0.5, 0.5, 2)) == Approx(0.7067009810651614).margin(1e-9));
        CHECK(thermal_concurrence(params(3, 0.14, 3, Mode::exact)) == Approx(0.8859566133304011).margin(1e-9));

        rnd::Engine g(5);
        std::uniform_real_distribution<double> ua(0.0, 5.0), ue(0.0, 1.0), ub(0.0, 6.0);
        for (int t = 0; t < 200; ++t) {
            const auto p = params(ua(g), ue(g), ub(g));
            const auto rho = oracle::gibbs(hamiltonian_two_qubit(p), p.beta);
            REQUIRE(std::abs(thermal_concurrence(p) - oracle::wootters_direct(rho)) <= 1e-7);
        }
    }
}

TEST_CASE("Wootters properties", "[entanglement][property]") {
    rnd::Engine g(77);
    SECTION("equals the pure-state formula on random real states") {
        for (int t = 0; t < 500; ++t) {
            const auto psi = rnd::real_state(g);
            const double a_m = psi[0].real(), b_p = psi[1].real(), b_m = psi[2].real(), a_p = psi[3].real();
            const double expected = 2.0 * std::abs(a_p * a_m - b_p * b_m);
            REQUIRE(std::abs(wootters_concurrence(DensityMatrix::pure(psi)).concurrence - expected) <= 1e-9);
        }
    }
    SECTION("equals the pure-state formula on random complex states") {
        for (int t = 0; t < 200; ++t) {
            const auto psi = rnd::complex_state(g);
            REQUIRE(std::abs(wootters_concurrence(DensityMatrix::pure(psi)).concurrence -
                             pure_state_concurrence(psi)) <= 1e-9);
        }
    }
    SECTION("invariant under local unitaries") {
        std::uniform_real_distribution<double> ua(0.0, 5.0), ue(0.0, 1.0), ub(0.0, 5.0);
        for (int t = 0; t < 200; ++t) {
            const auto p = params(ua(g), ue(g), ub(g));
            const auto rho = thermal_state(p);
            const auto u = kron2(rnd::unitary2(g), rnd::unitary2(g));
            const auto rotated = DensityMatrix::from_matrix(hermitian_part(u * rho.matrix() * u.adjoint()));
            const double c0 = wootters_concurrence(rho).concurrence;
            const double c1 = wootters_concurrence(rotated).concurrence;
            REQUIRE(std::abs(c0 - c1) <= 1e-9);
            REQUIRE(c0 >= 0.0);
            REQUIRE(c0 <= 1.0);
        }
    }
    SECTION("thermal limits") {
        CHECK(thermal_concurrence(params(1, 0.14, 0)) == 0.0);
        for (double a : {0.5, 1.0, 2.0, 4.0}) {
            const auto p = params(a, 0.14, 200);
            CHECK(thermal_concurrence(p) == Approx(closed_form_concurrence(p)).margin(1e-6));
        }
        const double high = thermal_concurrence(params(1e3, 0.14, 4));
        CHECK(high >= 0.49);
        CHECK(high <= 0.51);
    }
}
