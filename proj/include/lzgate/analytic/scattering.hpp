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

#include <cmath>

#include "lzgate/analytic/phases.hpp"
#include "lzgate/analytic/pulse.hpp"
#include "lzgate/core/complex2x2.hpp"
#include "lzgate/core/errors.hpp"
#include "lzgate/core/gamma.hpp"

namespace lzgate {

/// Angles of S' = Rz(phi) Rx(alpha) Rz(-phi); they depend on g only.
struct RotationAngles {
    double alpha = 0.0;
    double phi = 0.0;
};

/**
 * @brief alpha = 2 acos(exp(-pi g^2)),
 *        phi   = -2 phi_0 + arg Gamma(i g^2) + 3 pi / 4.
 *
 * arg Gamma is taken on the continuous branch, so phi is smooth in g.
 */
inline RotationAngles rotation_angles(double g) {
    detail::require(g > 0.0 && std::isfinite(g),
                    "rotation_angles: g must be positive");
    const double g2 = g * g;
    // acos(exp(-x)) loses precision for small x; use the equivalent
    // 2 atan(sqrt(1 - e^{-2x}) / e^{-x}) = 2 atan(sqrt(e^{2x} - 1)).
    const double alpha = 2.0 * std::atan(std::sqrt(std::expm1(2.0 * kPi * g2)));
    const double phi = -2.0 * phase_constant(g2) + arg_gamma_imag(g2) + 0.75 * kPi;
    return {alpha, phi};
}

/**
 * @brief Scattering matrix of a linear sweep in the modified adiabatic basis.
 *
 * phases are phi(t_1), phi(t_2) (without phi_0). For a downward sweep
 * (sweep_sign > 0):
 *
 *   S00 = exp(-pi g^2 + i(phi_2 - phi_1))
 *   S01 = -sqrt(2 pi) / (g Gamma(i g^2)) exp(-pi g^2/2 - i pi/4 + i(phi_1 + phi_2))
 *   S10 =  sqrt(2 pi) / (g Gamma(-i g^2)) exp(-pi g^2/2 + i pi/4 - i(phi_1 + phi_2))
 *   S11 = exp(-pi g^2 - i(phi_2 - phi_1))
 *
 * with phi_i including phi_0. An upward sweep gives the transpose with the
 * two phases interchanged.
 */
inline Complex2x2 scattering_matrix(double g, EndpointPhases phases,
                                    int sweep_sign) {
    detail::require(g > 0.0 && std::isfinite(g),
                    "scattering_matrix: g must be positive");
    const double g2 = g * g;
    const double phi0 = phase_constant(g2);
    double p1 = phases.start + phi0;
    double p2 = phases.end + phi0;
    if (sweep_sign < 0) std::swap(p1, p2);

    const cdouble lg = log_gamma_imag(g2);
    const double diag_mod = std::exp(-kPi * g2);
    const double log_off_mod =
        0.5 * std::log(2.0 * kPi) - std::log(g) - lg.real() - 0.5 * kPi * g2;
    const double off_mod = std::exp(log_off_mod);

    const cdouble s00 = std::polar(diag_mod, p2 - p1);
    const cdouble s11 = std::polar(diag_mod, p1 - p2);
    const cdouble s01 = -std::polar(off_mod, -lg.imag() - 0.25 * kPi + p1 + p2);
    const cdouble s10 = std::polar(off_mod, lg.imag() + 0.25 * kPi - p1 - p2);
    const Complex2x2 s{s00, s01, s10, s11};
    return sweep_sign < 0 ? s.transpose() : s;
}

/// Scattering matrix of a pulse under a constant detuning offset.
inline Complex2x2 scattering_matrix(const LinearSweepPulse &pulse,
                                    double offset = 0.0,
                                    OffsetModel model = OffsetModel::exact) {
    return scattering_matrix(pulse.g(), endpoint_phases(pulse, offset, model),
                             pulse.sweep_sign());
}

/// Rotation-operator parameters of one pulse.
struct RotationDecomposition {
    double alpha = 0.0;
    double phi = 0.0;
    double phase_start = 0.0;  ///< phi(t_1)
    double phase_end = 0.0;    ///< phi(t_2)
    int sweep_sign = 1;
};

inline RotationDecomposition decompose(const LinearSweepPulse &pulse,
                                       double offset = 0.0,
                                       OffsetModel model = OffsetModel::exact) {
    const RotationAngles angles = rotation_angles(pulse.g());
    const EndpointPhases phases = endpoint_phases(pulse, offset, model);
    return {angles.alpha, angles.phi, phases.start, phases.end,
            pulse.sweep_sign()};
}

/**
 * @brief S = Rz(-2 phi_2) Rz(Phi) Rx(alpha) Rz(-Phi) Rz(2 phi_1) for a
 * downward sweep; for an upward sweep Phi and both phases flip sign.
 */
inline Complex2x2 recompose(const RotationDecomposition &d) {
    const double s = d.sweep_sign > 0 ? 1.0 : -1.0;
    const double left = s * (d.phi - 2.0 * d.phase_end);
    const double right = s * (2.0 * d.phase_start - d.phi);
    return rz(left) * rx(d.alpha) * rz(right);
}

inline Complex2x2 rotation_form(const LinearSweepPulse &pulse,
                                double offset = 0.0,
                                OffsetModel model = OffsetModel::exact) {
    return recompose(decompose(pulse, offset, model));
}

}  // namespace lzgate
