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
#include <cstddef>
#include <vector>

#include "lzgate/analytic/adiabatic_frame.hpp"
#include "lzgate/analytic/pulse.hpp"
#include "lzgate/propagator/evolve.hpp"
#include "lzgate/propagator/profile.hpp"

namespace lzgate {

enum class Basis { adiabatic, computational };

struct TraceSample {
    double time = 0.0;
    double occupation = 0.0;     ///< population of the initially empty state
    bool near_crossing = false;  ///< adiabatic basis unreliable here
};

struct TraceOptions {
    EvolveOptions evolve{1e-9, 0.1, 24};
    double offset = 0.0;
    /// Adiabatic samples with |D| < factor * max(coupling, sqrt|rate|) are
    /// flagged.
    double suppression_factor = 2.0;
};

/// Both bases from a single propagation.
struct CrossingTraces {
    std::vector<TraceSample> adiabatic;
    std::vector<TraceSample> computational;
};

/**
 * @brief Occupation of the initially empty state along a pulse.
 *
 * The state starts in psi_0 at the pulse start and is sampled on a uniform
 * grid of n_samples points spanning the pulse. At exactly zero detuning the
 * adiabatic frame is taken as the limit from the pre-crossing side.
 */
inline CrossingTraces crossing_traces(const LinearSweepPulse &pulse,
                                      std::size_t n_samples,
                                      const TraceOptions &options = {}) {
    detail::require(n_samples >= 2, "crossing_trace: need at least 2 samples");
    const DetuningProfile profile =
        DetuningProfile::from_pulse(pulse, options.offset);
    const double t0 = pulse.time_start();
    const double t1 = pulse.time_end();
    const double coupling = pulse.coupling();
    const double window =
        options.suppression_factor * std::max(coupling, std::sqrt(pulse.abs_rate()));
    const double side = pulse.delta_start() + options.offset > 0.0 ? 1.0 : -1.0;

    std::array<cdouble, 2> state =
        adiabatic_frame(pulse.delta_start() + options.offset, coupling).psi0();

    // Each interval gets an equal share of the tolerance.
    EvolveOptions step_options = options.evolve;
    step_options.tol = std::max(
        1e-12, options.evolve.tol / static_cast<double>(n_samples - 1));

    CrossingTraces out;
    out.adiabatic.reserve(n_samples);
    out.computational.reserve(n_samples);
    double t_prev = t0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double t =
            k + 1 == n_samples
                ? t1
                : t0 + (t1 - t0) * static_cast<double>(k) /
                           static_cast<double>(n_samples - 1);
        if (t > t_prev) {
            state = apply_matrix(evolve(profile, t_prev, t, step_options), state);
        }
        t_prev = t;
        const double delta = pulse.detuning_at(t, options.offset);
        const double theta = delta != 0.0
                                 ? adiabatic_frame(delta, coupling).theta
                                 : side * 0.5 * kPi;
        const AdiabaticFrame frame{adiabatic_energy(delta, coupling), theta};
        const auto psi1 = frame.psi1();
        const cdouble overlap =
            std::conj(psi1[0]) * state[0] + std::conj(psi1[1]) * state[1];
        out.adiabatic.push_back({t, std::norm(overlap), std::abs(delta) < window});
        out.computational.push_back({t, std::norm(state[1]), false});
    }
    return out;
}

inline std::vector<TraceSample> crossing_trace(const LinearSweepPulse &pulse,
                                               Basis basis,
                                               std::size_t n_samples,
                                               const TraceOptions &options = {}) {
    CrossingTraces both = crossing_traces(pulse, n_samples, options);
    return basis == Basis::adiabatic ? std::move(both.adiabatic)
                                     : std::move(both.computational);
}

}  // namespace lzgate
