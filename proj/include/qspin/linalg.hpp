#pragma once

// Dense fixed-size complex matrices, a cyclic complex Jacobi eigensolver and
// spectral matrix functions. Sizes here are 2 and 4; nothing is heap allocated.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <ostream>

#include "qspin/error.hpp"

namespace qspin {

using Complex = std::complex<double>;

template <std::size_t N>
class Matrix {
public:
    static constexpr std::size_t dim = N;

    constexpr Matrix() = default;

    /// Row-major initializer: Matrix<2>{{a, b, c, d}}.
    constexpr explicit Matrix(const std::array<Complex, N * N>& entries) : a_(entries) {}

    static constexpr Matrix zero() { return Matrix{}; }

    static constexpr Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    static constexpr Matrix diagonal(const std::array<double, N>& d) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
        return m;
    }

    constexpr Complex& operator()(std::size_t i, std::size_t j) { return a_[i * N + j]; }
    constexpr const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * N + j]; }

    constexpr const std::array<Complex, N * N>& entries() const { return a_; }

    Matrix adjoint() const {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj((*this)(j, i));
        return r;
    }

    /// Entrywise complex conjugate (not the adjoint).
    Matrix conjugate() const {
        Matrix r;
        for (std::size_t k = 0; k < N * N; ++k) r.a_[k] = std::conj(a_[k]);
        return r;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius() const {
        double s = 0.0;
        for (const auto& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    bool all_finite() const {
        return std::all_of(a_.begin(), a_.end(), [](const Complex& z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    Matrix& operator+=(const Matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (std::size_t k = 0; k < N * N; ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(Complex s) {
        for (auto& z : a_) z *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator*(double s, Matrix a) { return a *= Complex(s); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t k = 0; k < N; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex(0.0)) continue;
                for (std::size_t j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) os << (j ? " " : "") << m(i, j);
            os << '\n';
        }
        return os;
    }

private:
    std::array<Complex, N * N> a_{};
};

using Mat2 = Matrix<2>;
using ComplexMat4 = Matrix<4>;

template <std::size_t N>
using Vector = std::array<Complex, N>;

template <std::size_t N>
Vector<N> operator*(const Matrix<N>& m, const Vector<N>& v) {
    Vector<N> r{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
    return r;
}

/// <u|v>, conjugate-linear in the first argument.
template <std::size_t N>
Complex inner(const Vector<N>& u, const Vector<N>& v) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += std::conj(u[i]) * v[i];
    return s;
}

template <std::size_t N>
Matrix<N> outer(const Vector<N>& u, const Vector<N>& v) {
    Matrix<N> r;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) r(i, j) = u[i] * std::conj(v[j]);
    return r;
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
    return a * b - b * a;
}

/// max_ij |m - m^dagger|_ij
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& m) {
    double d = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i; j < N; ++j) d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    return d;
}

template <std::size_t N>
Matrix<N> hermitian_part(const Matrix<N>& m) {
    return 0.5 * (m + m.adjoint());
}

/// (a (x) b)[2i+k, 2j+l] = a[i,j] * b[k,l]
inline ComplexMat4 kron2(const Mat2& a, const Mat2& b) {
    ComplexMat4 r;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return r;
}

/// Eigenvalues ascending; column k of `vectors` is the eigenvector of values[k].
template <std::size_t N>
struct Spectrum {
    std::array<double, N> values{};
    Matrix<N> vectors;

    Vector<N> vector(std::size_t k) const {
        Vector<N> v{};
        for (std::size_t i = 0; i < N; ++i) v[i] = vectors(i, k);
        return v;
    }

    /// sum_k f(lambda_k) v_k v_k^dagger
    template <class F>
    Matrix<N> apply(F&& f) const {
        Matrix<N> r;
        for (std::size_t k = 0; k < N; ++k) {
            const double fk = f(values[k]);
            if (fk == 0.0) continue;
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    r(i, j) += fk * vectors(i, k) * std::conj(vectors(j, k));
        }
        return r;
    }
};

using Spectrum4 = Spectrum<4>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kMaxJacobiSweeps = 100;

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Annihilates a(p,q) with the unitary U = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
// acting on the (p, q) plane: a <- U^dagger a U, v <- v U.
template <std::size_t N>
void jacobi_rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex phase = apq / r;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Complex em = std::conj(phase);  // e^{-i phi}

    for (std::size_t k = 0; k < N; ++k) {
        const Complex akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * em * akq;
        a(k, q) = s * akp + c * em * akq;
    }
    for (std::size_t k = 0; k < N; ++k) {
        const Complex apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    for (std::size_t k = 0; k < N; ++k) {
        const Complex vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp - s * em * vkq;
        v(k, q) = s * vkp + c * em * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace detail

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm drops
/// below tol * max(1, ||m||_F); degenerate eigenvectors come back in an
/// arbitrary orthonormal basis of their eigenspace.
template <std::size_t N>
Spectrum<N> herm_eigensolve(const Matrix<N>& m, double tol = kDefaultEigenTolerance) {
    if (!m.all_finite()) throw Error(ErrorKind::NotHermitian, "matrix has non-finite entries");
    if (hermiticity_defect(m) > kHermitianTolerance)
        throw Error(ErrorKind::NotHermitian, "max |m - m^dagger| exceeds 1e-12");

    Matrix<N> a = hermitian_part(m);
    Matrix<N> v = Matrix<N>::identity();
    const double threshold = tol * std::max(1.0, m.frobenius());

    int sweep = 0;
    while (detail::off_diagonal_norm(a) >= threshold) {
        if (sweep++ == kMaxJacobiSweeps)
            throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap reached");
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q) detail::jacobi_rotate(a, v, p, q);
    }

    std::array<std::size_t, N> order{};
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Spectrum<N> out;
    for (std::size_t k = 0; k < N; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < N; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

template <std::size_t N>
Matrix<N> mat_exp_hermitian(const Matrix<N>& m) {
    return herm_eigensolve(m).apply([](double x) { return std::exp(x); });
}

/// Principal square root of a PSD matrix. Eigenvalues in [-clamp, 0) are
/// treated as zero.
template <std::size_t N>
Matrix<N> mat_sqrt_psd(const Matrix<N>& m, double clamp = 1e-12) {
    const auto spec = herm_eigensolve(m);
    if (spec.values.front() < -clamp)
        throw Error(ErrorKind::NegativeEigenvalue, "eigenvalue below -clamp in PSD square root");
    return spec.apply([](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

}  // namespace qspin
