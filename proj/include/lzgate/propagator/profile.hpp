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
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "lzgate/analytic/pulse.hpp"
#include "lzgate/core/errors.hpp"

namespace lzgate {

/// One interval with linear detuning and constant coupling.
struct ProfileSegment {
    double t_begin = 0.0;
    double t_end = 0.0;
    double delta_begin = 0.0;
    double delta_end = 0.0;
    double coupling = 0.0;  ///< zero while the radiation is off

    [[nodiscard]] double duration() const { return t_end - t_begin; }
    [[nodiscard]] double slope() const {
        return (delta_end - delta_begin) / duration();
    }
    [[nodiscard]] double delta_at(double t) const {
        return delta_begin + slope() * (t - t_begin);
    }
};

/**
 * @brief Piecewise-linear detuning with piecewise-constant coupling.
 *
 * Segments tile a time interval without gaps. The detuning may jump between
 * consecutive segments: an instantaneous switch that takes no time and
 * leaves the computational-basis state unchanged.
 */
class DetuningProfile {
   public:
    explicit DetuningProfile(std::vector<ProfileSegment> segments)
        : segments_(std::move(segments)) {
        detail::require(!segments_.empty(), "DetuningProfile: no segments");
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const auto &s = segments_[i];
            detail::require(std::isfinite(s.t_begin) && std::isfinite(s.t_end) &&
                                std::isfinite(s.delta_begin) &&
                                std::isfinite(s.delta_end) &&
                                std::isfinite(s.coupling),
                            "DetuningProfile: non-finite segment");
            detail::require(s.t_end > s.t_begin,
                            "DetuningProfile: times must increase");
            detail::require(s.coupling >= 0.0,
                            "DetuningProfile: negative coupling");
            if (i > 0) {
                detail::require(s.t_begin == segments_[i - 1].t_end,
                                "DetuningProfile: segments must be contiguous");
            }
        }
    }

    /// Knots (t_k, D_k) joined linearly; coupling k applies on [t_k, t_{k+1}].
    static DetuningProfile from_knots(std::span<const double> times,
                                      std::span<const double> deltas,
                                      std::span<const double> couplings) {
        detail::require(times.size() >= 2 && deltas.size() == times.size() &&
                            couplings.size() + 1 == times.size(),
                        "DetuningProfile: knot/coupling size mismatch");
        std::vector<ProfileSegment> segments;
        for (std::size_t k = 0; k + 1 < times.size(); ++k) {
            segments.push_back({times[k], times[k + 1], deltas[k],
                                deltas[k + 1], couplings[k]});
        }
        return DetuningProfile(std::move(segments));
    }

    /// Pulses placed back to back; pulse k+1 must start when pulse k ends
    /// (to rounding, which is snapped away).
    static DetuningProfile from_pulses(std::span<const LinearSweepPulse> pulses,
                                       double offset = 0.0) {
        std::vector<ProfileSegment> segments;
        for (const auto &p : pulses) {
            double t0 = p.time_start();
            if (!segments.empty()) {
                const double prev = segments.back().t_end;
                const double scale =
                    std::max({1.0, std::abs(prev), std::abs(p.duration())});
                if (std::abs(t0 - prev) <= 1e-12 * scale) t0 = prev;
            }
            segments.push_back({t0, p.time_end(),
                                p.delta_start() + offset,
                                p.delta_end() + offset, p.coupling()});
        }
        return DetuningProfile(std::move(segments));
    }

    static DetuningProfile from_pulse(const LinearSweepPulse &pulse,
                                      double offset = 0.0) {
        return from_pulses(std::span(&pulse, 1), offset);
    }

    [[nodiscard]] const std::vector<ProfileSegment> &segments() const {
        return segments_;
    }
    [[nodiscard]] double t_begin() const { return segments_.front().t_begin; }
    [[nodiscard]] double t_end() const { return segments_.back().t_end; }

    /// Right-continuous at switches.
    [[nodiscard]] const ProfileSegment &segment_at(double t) const {
        for (const auto &s : segments_) {
            if (t < s.t_end) return s;
        }
        return segments_.back();
    }
    [[nodiscard]] double detuning_at(double t) const {
        return segment_at(t).delta_at(t);
    }
    [[nodiscard]] double coupling_at(double t) const {
        return segment_at(t).coupling;
    }

   private:
    std::vector<ProfileSegment> segments_;
};

}  // namespace lzgate
