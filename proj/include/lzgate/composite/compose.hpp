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
#include <string>
#include <string_view>

#include "lzgate/analytic/phases.hpp"
#include "lzgate/analytic/scattering.hpp"
#include "lzgate/composite/design.hpp"
#include "lzgate/core/complex2x2.hpp"
#include "lzgate/propagator/evolve.hpp"
#include "lzgate/propagator/profile.hpp"

namespace lzgate {

enum class EvaluationMode { perturbative, exact, numeric };

inline std::string_view to_string(EvaluationMode mode) {
    switch (mode) {
        case EvaluationMode::perturbative: return "perturbative";
        case EvaluationMode::exact: return "exact";
        case EvaluationMode::numeric: return "numeric";
    }
    return "?";
}

inline EvaluationMode parse_evaluation_mode(std::string_view name) {
    if (name == "perturbative") return EvaluationMode::perturbative;
    if (name == "exact") return EvaluationMode::exact;
    if (name == "numeric") return EvaluationMode::numeric;
    throw DomainError("unknown evaluation mode '" + std::string(name) + "'");
}

inline OffsetModel offset_model(EvaluationMode mode) {
    return mode == EvaluationMode::perturbative ? OffsetModel::perturbative
                                                : OffsetModel::exact;
}

namespace detail {

// One pulse propagated numerically and expressed in its own adiabatic frame.
inline Complex2x2 numeric_pulse(const DetuningProfile &profile,
                                const LinearSweepPulse &pulse, double offset,
                                const EvolveOptions &options) {
    const Complex2x2 u =
        evolve(profile, pulse.time_start(), pulse.time_end(), options);
    return to_adiabatic(u, pulse.delta_start() + offset,
                        pulse.delta_end() + offset, pulse.coupling());
}

}  // namespace detail

/// Single pulse in the adiabatic frame, any evaluation mode.
inline Complex2x2 pulse_matrix(const LinearSweepPulse &pulse, double offset,
                               EvaluationMode mode,
                               const EvolveOptions &options = {1e-9, 0.1, 24}) {
    if (mode == EvaluationMode::numeric) {
        pulse.require_offset_valid(offset);
        return detail::numeric_pulse(DetuningProfile::from_pulse(pulse, offset),
                                     pulse, offset, options);
    }
    return rotation_form(pulse, offset, offset_model(mode));
}

/**
 * @brief S_c = S_pi(trailing) S(working) S_pi(leading) under offset eps.
 *
 * perturbative/exact: analytic matrices, phases shifted by the second-order
 * expansion or re-evaluated at the shifted detunings. numeric: each pulse of
 * the sawtooth is propagated and converted to the adiabatic frame at its own
 * endpoints, so the instantaneous switches connect corresponding adiabatic
 * states.
 */
inline Complex2x2 compose(const CompositeSequence &seq, double offset,
                          EvaluationMode mode,
                          const EvolveOptions &options = {1e-9, 0.1, 24}) {
    if (mode == EvaluationMode::numeric) {
        const std::array<LinearSweepPulse, 3> pulses{
            seq.leading.pulse, seq.working, seq.trailing.pulse};
        for (const auto &p : pulses) p.require_offset_valid(offset);
        const DetuningProfile profile =
            DetuningProfile::from_pulses(pulses, offset);
        Complex2x2 total = Complex2x2::identity();
        for (const auto &p : pulses) {
            total = detail::numeric_pulse(profile, p, offset, options) * total;
        }
        return total;
    }
    const OffsetModel model = offset_model(mode);
    return scattering_matrix(seq.trailing.pulse, offset, model) *
           rotation_form(seq.working, offset, model) *
           scattering_matrix(seq.leading.pulse, offset, model);
}

/**
 * @brief Residual phase error at one working-pulse endpoint:
 * dphi(t_i) - dphi_pi(t_i) - dphi_pi(t_i'), using the adjacent pi-pulse.
 *
 * Both sides use the same signs. The exact model differences the
 * closed-form phase without cancellation, so the cubic remainder stays
 * resolvable down to eps ~ 1e-4 coupling.
 */
inline double corrected_phase_error(const CompositeSequence &seq,
                                    Endpoint endpoint, double offset,
                                    OffsetModel model = OffsetModel::exact) {
    const LinearSweepPulse &pi =
        endpoint == Endpoint::end ? seq.trailing.pulse : seq.leading.pulse;
    return phase_offset(seq.working, endpoint, offset, model) -
           phase_offset(pi, Endpoint::start, offset, model) -
           phase_offset(pi, Endpoint::end, offset, model);
}

/// -i X Rz(2 phi_pi(t) + 2 phi_pi(t') - 2 Phi_pi): pi-pulse with the
/// exp(-pi g^2) corrections dropped.
inline Complex2x2 pi_pulse_approximation(const LinearSweepPulse &pulse,
                                         double offset = 0.0,
                                         OffsetModel model = OffsetModel::exact) {
    const EndpointPhases p = endpoint_phases(pulse, offset, model);
    const double phi = rotation_angles(pulse.g()).phi;
    return cdouble(0.0, -1.0) * pauli_x() *
           rz(2.0 * p.start + 2.0 * p.end - 2.0 * phi);
}

}  // namespace lzgate
