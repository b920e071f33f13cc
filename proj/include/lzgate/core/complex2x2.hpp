// Copyright 2026 The lzgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "lzgate/core/errors.hpp"

namespace lzgate {

using cdouble = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Tolerance on ||M^dagger M - I||_2 for matrices produced by closed-form
/// constructors.
inline constexpr double kUnitaryTolerance = 1e-12;

/**
 * @brief Dense 2x2 complex matrix stored row-major (a00, a01, a10, a11).
 *
 * Represents single-qubit operators: scattering matrices, rotations,
 * numerical propagators and basis changes.
 */
class Complex2x2 {
   public:
    constexpr Complex2x2() = default;
    constexpr Complex2x2(cdouble a00, cdouble a01, cdouble a10, cdouble a11)
        : m_{a00, a01, a10, a11} {}

    static constexpr Complex2x2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Complex2x2 zero() { return {}; }
    static constexpr Complex2x2 diagonal(cdouble d0, cdouble d1) {
        return {d0, 0.0, 0.0, d1};
    }

    constexpr cdouble operator()(std::size_t row, std::size_t col) const {
        return m_[2 * row + col];
    }
    constexpr cdouble &operator()(std::size_t row, std::size_t col) {
        return m_[2 * row + col];
    }

    [[nodiscard]] constexpr const std::array<cdouble, 4> &entries() const {
        return m_;
    }

    [[nodiscard]] Complex2x2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
                std::conj(m_[3])};
    }
    [[nodiscard]] constexpr Complex2x2 transpose() const {
        return {m_[0], m_[2], m_[1], m_[3]};
    }
    [[nodiscard]] constexpr cdouble determinant() const {
        return m_[0] * m_[3] - m_[1] * m_[2];
    }
    [[nodiscard]] constexpr cdouble trace() const { return m_[0] + m_[3]; }

    [[nodiscard]] bool is_finite() const {
        return std::all_of(m_.begin(), m_.end(), [](const cdouble &z) {
            return std::isfinite(z.real()) && std::isfinite(z.imag());
        });
    }

    constexpr Complex2x2 &operator+=(const Complex2x2 &rhs) {
        for (std::size_t i = 0; i < 4; ++i) m_[i] += rhs.m_[i];
        return *this;
    }
    constexpr Complex2x2 &operator-=(const Complex2x2 &rhs) {
        for (std::size_t i = 0; i < 4; ++i) m_[i] -= rhs.m_[i];
        return *this;
    }
    constexpr Complex2x2 &operator*=(cdouble s) {
        for (auto &z : m_) z *= s;
        return *this;
    }

    friend constexpr Complex2x2 operator+(Complex2x2 a, const Complex2x2 &b) {
        return a += b;
    }
    friend constexpr Complex2x2 operator-(Complex2x2 a, const Complex2x2 &b) {
        return a -= b;
    }
    friend constexpr Complex2x2 operator-(Complex2x2 a) { return a *= -1.0; }
    friend constexpr Complex2x2 operator*(cdouble s, Complex2x2 a) {
        return a *= s;
    }
    friend constexpr Complex2x2 operator*(Complex2x2 a, cdouble s) {
        return a *= s;
    }
    friend constexpr Complex2x2 operator*(const Complex2x2 &a,
                                          const Complex2x2 &b) {
        return {a.m_[0] * b.m_[0] + a.m_[1] * b.m_[2],
                a.m_[0] * b.m_[1] + a.m_[1] * b.m_[3],
                a.m_[2] * b.m_[0] + a.m_[3] * b.m_[2],
                a.m_[2] * b.m_[1] + a.m_[3] * b.m_[3]};
    }
    friend constexpr bool operator==(const Complex2x2 &,
                                     const Complex2x2 &) = default;

   private:
    std::array<cdouble, 4> m_{};
};

/// Applies the matrix to a column vector (c0, c1).
inline std::array<cdouble, 2> apply_matrix(const Complex2x2 &m,
                                    const std::array<cdouble, 2> &v) {
    return {m(0, 0) * v[0] + m(0, 1) * v[1], m(1, 0) * v[0] + m(1, 1) * v[1]};
}

/// Largest entrywise modulus of a - b.
inline double max_entry_deviation(const Complex2x2 &a, const Complex2x2 &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

/**
 * @brief Spectral norm (largest singular value).
 *
 * Largest eigenvalue of H = M^dagger M from its entries. The discriminant
 * is a sum of squares, so equal singular values (the generic case for
 * differences of SU(2) matrices) lose no precision.
 */
inline double spectral_norm(const Complex2x2 &m) {
    const double h00 = std::norm(m(0, 0)) + std::norm(m(1, 0));
    const double h11 = std::norm(m(0, 1)) + std::norm(m(1, 1));
    const cdouble h01 = std::conj(m(0, 0)) * m(0, 1) + std::conj(m(1, 0)) * m(1, 1);
    const double lambda =
        0.5 * (h00 + h11) + std::hypot(0.5 * (h00 - h11), std::abs(h01));
    return std::sqrt(lambda);
}

/// ||M^dagger M - I||_2.
inline double unitarity_defect(const Complex2x2 &m) {
    return spectral_norm(m.adjoint() * m - Complex2x2::identity());
}

inline bool is_unitary(const Complex2x2 &m, double tol = kUnitaryTolerance) {
    return m.is_finite() && unitarity_defect(m) <= tol;
}

// Pauli operators. In the adiabatic frame these act on (psi_0, psi_1).
inline constexpr Complex2x2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline constexpr Complex2x2 pauli_y() {
    return {0.0, cdouble(0.0, -1.0), cdouble(0.0, 1.0), 0.0};
}
inline constexpr Complex2x2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

/// exp(-i angle Z / 2).
inline Complex2x2 rz(double angle) {
    return Complex2x2::diagonal(std::polar(1.0, -0.5 * angle),
                                std::polar(1.0, 0.5 * angle));
}

/// exp(-i angle X / 2).
inline Complex2x2 rx(double angle) {
    const double c = std::cos(0.5 * angle);
    const cdouble s(0.0, -std::sin(0.5 * angle));
    return {c, s, s, c};
}

/**
 * @brief exp(-i (hx X + hy Y + hz Z)) in closed form.
 *
 * With w = |h|, the exponential is cos(w) I - i sin(w)/w (h . sigma).
 */
inline Complex2x2 exp_pauli(double hx, double hy, double hz) {
    const double w = std::sqrt(hx * hx + hy * hy + hz * hz);
    const double c = std::cos(w);
    // sin(w)/w, with the series near zero
    const double sinc = w < 1e-8 ? 1.0 - w * w / 6.0 : std::sin(w) / w;
    const cdouble mi(0.0, -sinc);
    return {c + mi * hz, mi * cdouble(hx, -hy), mi * cdouble(hx, hy),
            c - mi * hz};
}

}  // namespace lzgate
