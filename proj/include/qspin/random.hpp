#pragma once

// Random matrices and states for property checks.

#include <cmath>
#include <random>

#include "qspin/linalg.hpp"

namespace qspin::rnd {

using Engine = std::mt19937_64;

/// Hermitian matrix with entries (real and imaginary parts) uniform in [-1, 1].
template <std::size_t N>
Matrix<N> hermitian(Engine& g) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix<N> m;
    for (std::size_t i = 0; i < N; ++i) {
        m(i, i) = u(g);
        for (std::size_t j = i + 1; j < N; ++j) {
            m(i, j) = Complex(u(g), u(g));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

/// Haar-distributed SU(2) element times a random phase.
inline Mat2 unitary2(Engine& g) {
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> ph(0.0, 2.0 * 3.14159265358979323846);
    Complex a(n(g), n(g)), b(n(g), n(g));
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    const Complex phase = std::polar(1.0, ph(g));
    return Mat2{{phase * a, -phase * std::conj(b), phase * b, phase * std::conj(a)}};
}

/// Normalized state with real Gaussian amplitudes.
inline Vector<4> real_state(Engine& g) {
    std::normal_distribution<double> n;
    Vector<4> v;
    double s = 0.0;
    for (auto& x : v) {
        x = n(g);
        s += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(s);
    return v;
}

/// Normalized state with complex Gaussian amplitudes.
inline Vector<4> complex_state(Engine& g) {
    std::normal_distribution<double> n;
    Vector<4> v;
    double s = 0.0;
    for (auto& x : v) {
        x = Complex(n(g), n(g));
        s += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(s);
    return v;
}

}  // namespace qspin::rnd
