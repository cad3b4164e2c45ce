#pragma once

// The 16 two-qubit Pauli products sigma_i (x) sigma_j, i, j in {0, x, y, z}.
//
// Convention (used by every module):
//   sigma_0 = [[1, 0], [0, 1]]    sigma_x = [[0, 1], [1, 0]]
//   sigma_y = [[0, -i], [i, 0]]   sigma_z = [[1, 0], [0, -1]]
// and sigma_i (x) sigma_j acts on |first qubit, second qubit>, first qubit
// being the most significant bit of the row index.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "qspin/linalg.hpp"

namespace qspin {

enum class Pauli : std::size_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr std::array<Pauli, 4> kPaulis{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};

constexpr char pauli_label(Pauli p) { return "0xyz"[static_cast<std::size_t>(p)]; }

inline const Mat2& pauli_matrix(Pauli p) {
    using namespace std::complex_literals;
    static const std::array<Mat2, 4> table{
        Mat2{{1.0, 0.0, 0.0, 1.0}},
        Mat2{{0.0, 1.0, 1.0, 0.0}},
        Mat2{{0.0, -1.0i, 1.0i, 0.0}},
        Mat2{{1.0, 0.0, 0.0, -1.0}},
    };
    return table[static_cast<std::size_t>(p)];
}

struct PauliIndex {
    Pauli first = Pauli::I;
    Pauli second = Pauli::I;

    /// Flat position 4 * first + second in [0, 16).
    constexpr std::size_t flat() const {
        return 4 * static_cast<std::size_t>(first) + static_cast<std::size_t>(second);
    }

    static constexpr PauliIndex from_flat(std::size_t k) {
        return {static_cast<Pauli>(k / 4), static_cast<Pauli>(k % 4)};
    }

    std::string label() const { return {pauli_label(first), pauli_label(second)}; }

    /// Parses labels like "zz", "x0", "0y" (case-insensitive, 'i' accepted for identity).
    static std::optional<PauliIndex> parse(std::string_view s) {
        if (s.size() != 2) return std::nullopt;
        auto one = [](char c) -> std::optional<Pauli> {
            switch (c) {
                case '0': case 'i': case 'I': return Pauli::I;
                case 'x': case 'X': return Pauli::X;
                case 'y': case 'Y': return Pauli::Y;
                case 'z': case 'Z': return Pauli::Z;
                default: return std::nullopt;
            }
        };
        auto a = one(s[0]), b = one(s[1]);
        if (!a || !b) return std::nullopt;
        return PauliIndex{*a, *b};
    }

    friend constexpr bool operator==(PauliIndex, PauliIndex) = default;
};

inline const ComplexMat4& basis_element(PauliIndex idx) {
    static const std::array<ComplexMat4, 16> table = [] {
        std::array<ComplexMat4, 16> t;
        for (std::size_t k = 0; k < 16; ++k) {
            const auto ix = PauliIndex::from_flat(k);
            t[k] = kron2(pauli_matrix(ix.first), pauli_matrix(ix.second));
        }
        return t;
    }();
    return table[idx.flat()];
}

inline const ComplexMat4& basis_element(Pauli first, Pauli second) {
    return basis_element(PauliIndex{first, second});
}

/// Expansion coefficients in the sigma_i (x) sigma_j basis. Kept complex so
/// non-Hermitian intermediates can be decomposed too.
class PauliCoeffs {
public:
    Complex& operator[](PauliIndex idx) { return c_[idx.flat()]; }
    const Complex& operator[](PauliIndex idx) const { return c_[idx.flat()]; }

    const std::array<Complex, 16>& values() const { return c_; }

    /// Largest |Im c_ij|; zero up to rounding for Hermitian sources.
    double max_imag() const {
        double m = 0.0;
        for (const auto& z : c_) m = std::max(m, std::abs(z.imag()));
        return m;
    }

    friend bool operator==(const PauliCoeffs&, const PauliCoeffs&) = default;

private:
    std::array<Complex, 16> c_{};
};

/// c_ij = Tr(m sigma_i (x) sigma_j) / 4
inline PauliCoeffs decompose(const ComplexMat4& m) {
    PauliCoeffs c;
    for (std::size_t k = 0; k < 16; ++k) {
        const auto idx = PauliIndex::from_flat(k);
        c[idx] = (m * basis_element(idx)).trace() / 4.0;
    }
    return c;
}

inline ComplexMat4 reconstruct(const PauliCoeffs& c) {
    ComplexMat4 m;
    for (std::size_t k = 0; k < 16; ++k) {
        const auto idx = PauliIndex::from_flat(k);
        if (c[idx] != Complex(0.0)) m += c[idx] * basis_element(idx);
    }
    return m;
}

}  // namespace qspin
