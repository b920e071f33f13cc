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

#include <array>
#include <cmath>

#include "lzgate/core/complex2x2.hpp"
#include "lzgate/core/errors.hpp"

namespace lzgate {

/// Instantaneous energy E = sqrt(detuning^2/4 + coupling^2).
inline double adiabatic_energy(double detuning, double coupling) {
    return std::hypot(0.5 * detuning, coupling);
}

/**
 * @brief Modified adiabatic basis of H = (detuning/2) Z + coupling X.
 *
 * The mixing angle carries the sign of the detuning so that psi_0 and psi_1
 * connect to |0> and |1> as |detuning| grows, on either side of resonance.
 * The state psi_n has energy (-1)^n sgn(detuning) E.
 */
struct AdiabaticFrame {
    double energy = 0.0;
    double theta = 0.0;

    [[nodiscard]] std::array<cdouble, 2> psi0() const {
        return {std::cos(0.5 * theta), std::sin(0.5 * theta)};
    }
    [[nodiscard]] std::array<cdouble, 2> psi1() const {
        return {-std::sin(0.5 * theta), std::cos(0.5 * theta)};
    }
    /// Columns are psi_0 and psi_1 in the computational basis.
    [[nodiscard]] Complex2x2 basis_change() const {
        const double c = std::cos(0.5 * theta);
        const double s = std::sin(0.5 * theta);
        return {c, -s, s, c};
    }
};

/// Throws DomainError at zero detuning, where theta jumps by pi.
inline AdiabaticFrame adiabatic_frame(double detuning, double coupling) {
    detail::require(coupling > 0.0 && std::isfinite(coupling),
                    "adiabatic_frame: coupling must be positive");
    detail::require(std::isfinite(detuning),
                    "adiabatic_frame: detuning must be finite");
    detail::require(detuning != 0.0,
                    "adiabatic_frame: undefined at zero detuning");
    const double energy = adiabatic_energy(detuning, coupling);
    // theta = sgn(D) acos(|D| / 2E) = atan(2 coupling / D) for D != 0, the
    // latter without cancellation for large |D|.
    const double theta = std::atan(2.0 * coupling / detuning);
    return {energy, theta};
}

}  // namespace lzgate
