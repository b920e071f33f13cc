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
#include <sstream>
#include <string>

#include "lzgate/core/errors.hpp"

namespace lzgate {

/// Default adiabatic threshold: |detuning| >= factor * max(coupling, sqrt|rate|)
/// at both endpoints.
inline constexpr double kDefaultThresholdFactor = 3.0;

enum class Endpoint { start = 1, end = 2 };

/**
 * @brief One radiation pulse with a linear detuning ramp through resonance.
 *
 * detuning(t) = -sweep_rate * (t - crossing_time). A positive sweep rate
 * means the detuning decreases, so the pulse starts above resonance. The
 * endpoint detunings must straddle zero and sit outside the adiabatic
 * threshold.
 */
class LinearSweepPulse {
   public:
    LinearSweepPulse(double coupling, double sweep_rate, double delta_start,
                     double delta_end, double crossing_time = 0.0,
                     double threshold_factor = kDefaultThresholdFactor)
        : coupling_(coupling),
          sweep_rate_(sweep_rate),
          delta_start_(delta_start),
          delta_end_(delta_end),
          crossing_time_(crossing_time) {
        validate(threshold_factor);
    }

    /// Builds a pulse from the dimensionless coupling g = coupling/sqrt|rate|.
    static LinearSweepPulse from_g(double g, double sweep_rate,
                                   double delta_start, double delta_end,
                                   double crossing_time = 0.0,
                                   double threshold_factor =
                                       kDefaultThresholdFactor) {
        return {g * std::sqrt(std::abs(sweep_rate)), sweep_rate, delta_start,
                delta_end, crossing_time, threshold_factor};
    }

    /// Symmetric downward sweep +delta -> -delta.
    static LinearSweepPulse symmetric(double g, double sweep_rate,
                                      double delta,
                                      double threshold_factor =
                                          kDefaultThresholdFactor) {
        return from_g(g, sweep_rate, delta, -delta, 0.0, threshold_factor);
    }

    [[nodiscard]] double coupling() const { return coupling_; }
    [[nodiscard]] double sweep_rate() const { return sweep_rate_; }
    [[nodiscard]] double abs_rate() const { return std::abs(sweep_rate_); }
    [[nodiscard]] int sweep_sign() const { return sweep_rate_ > 0 ? 1 : -1; }
    [[nodiscard]] double g() const { return coupling_ / std::sqrt(abs_rate()); }
    [[nodiscard]] double g_squared() const {
        return coupling_ * coupling_ / abs_rate();
    }

    [[nodiscard]] double delta_start() const { return delta_start_; }
    [[nodiscard]] double delta_end() const { return delta_end_; }
    [[nodiscard]] double delta(Endpoint e) const {
        return e == Endpoint::start ? delta_start_ : delta_end_;
    }

    [[nodiscard]] double crossing_time() const { return crossing_time_; }
    [[nodiscard]] double time_start() const {
        return crossing_time_ - delta_start_ / sweep_rate_;
    }
    [[nodiscard]] double time_end() const {
        return crossing_time_ - delta_end_ / sweep_rate_;
    }
    [[nodiscard]] double time(Endpoint e) const {
        return e == Endpoint::start ? time_start() : time_end();
    }
    [[nodiscard]] double duration() const { return time_end() - time_start(); }

    /// Detuning at time t including a constant offset.
    [[nodiscard]] double detuning_at(double t, double offset = 0.0) const {
        return -sweep_rate_ * (t - crossing_time_) + offset;
    }

    /// Copy of this pulse moved so that it starts at time t0.
    [[nodiscard]] LinearSweepPulse starting_at(double t0) const {
        LinearSweepPulse copy = *this;
        copy.crossing_time_ = t0 + delta_start_ / sweep_rate_;
        return copy;
    }

    /// Throws DomainError if the offset pushes an endpoint through resonance.
    void require_offset_valid(double offset) const {
        const auto keeps_sign = [offset](double d) {
            return (d + offset) * d > 0.0;
        };
        if (!std::isfinite(offset) || !keeps_sign(delta_start_) ||
            !keeps_sign(delta_end_)) {
            std::ostringstream msg;
            msg << "offset " << offset
                << " moves a pulse endpoint through zero detuning";
            throw DomainError(msg.str());
        }
    }

   private:
    void validate(double threshold_factor) const {
        const bool finite = std::isfinite(coupling_) &&
                            std::isfinite(sweep_rate_) &&
                            std::isfinite(delta_start_) &&
                            std::isfinite(delta_end_) &&
                            std::isfinite(crossing_time_);
        detail::require(finite, "LinearSweepPulse: non-finite parameter");
        detail::require(coupling_ > 0.0,
                        "LinearSweepPulse: coupling must be positive");
        detail::require(sweep_rate_ != 0.0,
                        "LinearSweepPulse: sweep rate must be nonzero");
        detail::require(delta_start_ * delta_end_ < 0.0,
                        "LinearSweepPulse: endpoints must straddle resonance");
        detail::require((delta_start_ > 0.0) == (sweep_rate_ > 0.0),
                        "LinearSweepPulse: start detuning sign must match "
                        "the sweep direction");
        const double scale =
            threshold_factor * std::max(coupling_, std::sqrt(abs_rate()));
        if (std::abs(delta_start_) < scale || std::abs(delta_end_) < scale) {
            std::ostringstream msg;
            msg << "LinearSweepPulse: endpoint detunings (" << delta_start_
                << ", " << delta_end_ << ") inside adiabatic threshold "
                << scale;
            throw DomainError(msg.str());
        }
    }

    double coupling_;
    double sweep_rate_;
    double delta_start_;
    double delta_end_;
    double crossing_time_;
};

}  // namespace lzgate
