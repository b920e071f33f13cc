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

// Adiabatic phases accumulated between the crossing time and a pulse
// endpoint, and their response to a constant detuning offset.
//
// Phase model: phi(D) = |integral_{t_c}^{t} E dt| over the linear ramp,
//   phi(D) = |D| E / (2 r) + g^2 asinh(|D| / 2c)           (exact)
//          = D^2/(4 r) + g^2 ln(|D|/sqrt r) + g^4 r/(2 D^2) - phi_0 + O(D^-4)
// with phi_0 = g^2 (ln g^2 - 1) / 2, r = |rate|, g^2 = c^2 / r. The exact
// antiderivative drives the matrices; the truncated series is kept as the
// textbook form. An offset eps replaces D by D + eps at fixed endpoint time
// and moves the crossing time by eps/rate.

#pragma once

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lzgate/analytic/adiabatic_frame.hpp"
#include "lzgate/analytic/pulse.hpp"
#include "lzgate/core/errors.hpp"

namespace lzgate {

enum class PhaseMethod {
    closed_form,     ///< large-|D| series truncated after the |D|^-2 term
    antiderivative,  ///< exact integral of E, in closed form
    quadrature       ///< numerical integral of E(t)
};

/// How a detuning offset enters the endpoint phases.
enum class OffsetModel {
    perturbative,  ///< second-order expansion in the offset
    exact          ///< phase model re-evaluated at the shifted detuning
};

/// phi_0 = g^2 (ln g^2 - 1) / 2.
inline double phase_constant(double g_squared) {
    return 0.5 * g_squared * (std::log(g_squared) - 1.0);
}

/// Truncated series: D^2/(4r) + g^2 ln(|D|/sqrt r) + g^4 r/(2 D^2) - phi_0.
inline double phase_series(double abs_delta, double coupling,
                           double abs_rate) {
    const double g2 = coupling * coupling / abs_rate;
    const double d2 = abs_delta * abs_delta;
    return d2 / (4.0 * abs_rate) +
           g2 * std::log(abs_delta / std::sqrt(abs_rate)) +
           g2 * g2 * abs_rate / (2.0 * d2) - phase_constant(g2);
}

/**
 * @brief phi(|D|) = (1/|rate|) integral_0^|D| E dD', E = sqrt(D^2/4 + c^2).
 *
 * Closed form |D| E / (2|rate|) + g^2 asinh(|D| / 2c). Its large-|D| series
 * is |D|^2/(4|rate|) + g^2 ln(|D|/sqrt|rate|) + g^4 |rate| / (2 |D|^2) - phi_0
 * + O(|D|^-4); keeping the full antiderivative matters for pi-pulses, whose
 * coupling is comparable to the endpoint detuning.
 */
inline double phase_integral(double abs_delta, double coupling,
                                double abs_rate) {
    const double g2 = coupling * coupling / abs_rate;
    const double energy = adiabatic_energy(abs_delta, coupling);
    return abs_delta * energy / (2.0 * abs_rate) +
           g2 * std::asinh(abs_delta / (2.0 * coupling));
}

/**
 * @brief phi(|D| + shift) - phi(|D|).
 *
 * Evaluated without subtracting two large phases, so tiny shifts keep full
 * relative precision.
 */
inline double phase_integral_shift(double abs_delta, double shift,
                                      double coupling, double abs_rate) {
    const double g2 = coupling * coupling / abs_rate;
    const double d = abs_delta;
    const double dp = d + shift;
    const double e = adiabatic_energy(d, coupling);
    const double ep = adiabatic_energy(dp, coupling);
    const double quad = shift * (2.0 * d + shift);  // dp^2 - d^2
    // dp ep - d e = shift ep + d (ep - e), ep - e = quad / 4 / (ep + e)
    const double de_term = shift * ep + d * quad / (4.0 * (ep + e));
    // asinh(a) - asinh(b) = asinh(a sqrt(1+b^2) - b sqrt(1+a^2))
    const double asinh_term = std::asinh(quad / (2.0 * (dp * e + d * ep)));
    return de_term / (2.0 * abs_rate) + g2 * asinh_term;
}

/// d phi / d|D| = E / |rate|.
inline double phase_slope(double abs_delta, double coupling,
                                      double abs_rate) {
    return adiabatic_energy(abs_delta, coupling) / abs_rate;
}

/// d^2 phi / d|D|^2 = |D| / (4 |rate| E).
inline double phase_curvature(double abs_delta, double coupling,
                                          double abs_rate) {
    return abs_delta /
           (4.0 * abs_rate * adiabatic_energy(abs_delta, coupling));
}

/// d^3 phi / d|D|^3 = c^2 / (4 |rate| E^3).
inline double phase_third(double abs_delta, double coupling,
                                      double abs_rate) {
    const double e = adiabatic_energy(abs_delta, coupling);
    return coupling * coupling / (4.0 * abs_rate * e * e * e);
}

namespace detail {

inline double shifted_magnitude(const LinearSweepPulse &pulse, Endpoint e,
                                double offset) {
    pulse.require_offset_valid(offset);
    return std::abs(pulse.delta(e) + offset);
}

}  // namespace detail

/**
 * @brief Adiabatic phase phi(t_i) = |integral_{t_c}^{t_i} E dt| under an
 * offset.
 *
 * closed_form and antiderivative evaluate the series or the exact integral
 * at |D_i + offset|. quadrature integrates E(t) numerically from the shifted crossing time to the fixed
 * endpoint time (Gauss-Kronrod, absolute accuracy well below 1e-12 for the
 * detunings used here).
 */
inline double adiabatic_phase(const LinearSweepPulse &pulse, Endpoint endpoint,
                              double offset = 0.0,
                              PhaseMethod method = PhaseMethod::antiderivative) {
    const double magnitude = detail::shifted_magnitude(pulse, endpoint, offset);
    if (method == PhaseMethod::closed_form) {
        return phase_series(magnitude, pulse.coupling(), pulse.abs_rate());
    }
    if (method == PhaseMethod::antiderivative) {
        return phase_integral(magnitude, pulse.coupling(), pulse.abs_rate());
    }
    const double t_cross = pulse.crossing_time() + offset / pulse.sweep_rate();
    const double t_end = pulse.time(endpoint);
    auto energy = [&](double t) {
        return adiabatic_energy(pulse.detuning_at(t, offset), pulse.coupling());
    };
    double estimate = 0.0;
    const double value =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            energy, std::min(t_cross, t_end), std::max(t_cross, t_end), 20,
            1e-15, &estimate);
    return value;
}

/// Offset-induced phase increment, second-order expansion:
/// sgn(D) E eps / |rate| + |D| eps^2 / (8 |rate| E), evaluated at the
/// unshifted endpoint.
inline double phase_offset_perturbative(const LinearSweepPulse &pulse,
                                        Endpoint endpoint, double offset) {
    const double d = pulse.delta(endpoint);
    const double energy = adiabatic_energy(d, pulse.coupling());
    const double r = pulse.abs_rate();
    const double sign = d > 0.0 ? 1.0 : -1.0;
    return sign * energy * offset / r +
           std::abs(d) * offset * offset / (8.0 * r * energy);
}

/// Offset-induced phase increment of the closed-form model, exact in the
/// offset.
inline double phase_offset_exact(const LinearSweepPulse &pulse,
                                 Endpoint endpoint, double offset) {
    pulse.require_offset_valid(offset);
    const double d = pulse.delta(endpoint);
    const double shift = d > 0.0 ? offset : -offset;
    return phase_integral_shift(std::abs(d), shift, pulse.coupling(),
                                   pulse.abs_rate());
}

inline double phase_offset(const LinearSweepPulse &pulse, Endpoint endpoint,
                           double offset, OffsetModel model) {
    return model == OffsetModel::exact
               ? phase_offset_exact(pulse, endpoint, offset)
               : phase_offset_perturbative(pulse, endpoint, offset);
}

/// phi(t_1), phi(t_2) without phi_0.
struct EndpointPhases {
    double start = 0.0;
    double end = 0.0;
};

inline EndpointPhases endpoint_phases(const LinearSweepPulse &pulse,
                                      double offset = 0.0,
                                      OffsetModel model = OffsetModel::exact) {
    pulse.require_offset_valid(offset);
    const auto one = [&](Endpoint e) {
        return phase_integral(std::abs(pulse.delta(e)), pulse.coupling(),
                                 pulse.abs_rate()) +
               phase_offset(pulse, e, offset, model);
    };
    return {one(Endpoint::start), one(Endpoint::end)};
}

}  // namespace lzgate
