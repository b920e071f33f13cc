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

// Design of the three-pulse sequence  pi-pulse / working pulse / pi-pulse.
//
// All pulses sweep downward and follow each other without delay, giving a
// sawtooth detuning profile:
//
//   leading pi:  +far  -> -near      (rate r_pi)
//   working:     +D*   -> -D*        (rate r)
//   trailing pi: +near -> -far       (rate r_pi)
//
// A detuning offset eps shifts every endpoint phase. On each side the
// working-pulse phase error is cancelled by the two phase errors of the
// adjacent pi-pulse through second order in eps.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include <boost/math/tools/toms748_solve.hpp>

#include "lzgate/analytic/phases.hpp"
#include "lzgate/analytic/pulse.hpp"
#include "lzgate/analytic/scattering.hpp"
#include "lzgate/core/errors.hpp"

namespace lzgate {

enum class Side { leading, trailing };

enum class CompensationMethod {
    /// rate_pi = 2 rate, |far| = 2|D_w| + near (energies approximated by |D|/2)
    simplified,
    /// first- and second-order conditions solved exactly for (rate_pi, far)
    full
};

struct DesignOptions {
    CompensationMethod compensation = CompensationMethod::full;
    double leakage_budget = 1e-5;  ///< bound on exp(-pi g_pi^2)
    double threshold_factor = kDefaultThresholdFactor;
};

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
    double w = std::remainder(a, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    return w;
}

namespace detail {

inline double solve_increasing(const auto &f, double lo, double hi) {
    std::uintmax_t iterations = 200;
    const auto result = boost::math::tools::toms748_solve(
        f, lo, hi, boost::math::tools::eps_tolerance<double>(52), iterations);
    return 0.5 * (result.first + result.second);
}

// Expands [lo, hi] upward in steps of `step` until f(hi) >= 0; f(lo) <= 0.
inline std::optional<std::pair<double, double>> bracket_upward(
    const auto &f, double lo, double step, int max_steps = 400) {
    double hi = lo;
    for (int i = 0; i < max_steps; ++i) {
        hi += step;
        if (f(hi) >= 0.0) return std::pair{lo, hi};
        lo = hi;
    }
    return std::nullopt;
}

}  // namespace detail

/**
 * @brief Symmetric working pulse +D* -> -D* with Phi - 2 phi(D*) = 0 mod 2pi.
 *
 * D* is the root nearest to delta_target; with these phases the pulse is the
 * pure rotation Rx(alpha) at zero offset. phi is increasing in D*, so
 * consecutive roots are about 2 pi / D* apart (rate 1).
 */
inline LinearSweepPulse quantize_working_pulse(
    double g, double delta_target, double sweep_rate = 1.0,
    double threshold_factor = kDefaultThresholdFactor) {
    detail::require(g > 0.0 && std::isfinite(g),
                    "quantize_working_pulse: g must be positive");
    detail::require(sweep_rate > 0.0,
                    "quantize_working_pulse: sweep rate must be positive");
    const double coupling = g * std::sqrt(sweep_rate);
    const double threshold =
        threshold_factor * std::max(coupling, std::sqrt(sweep_rate));
    detail::require(delta_target >= threshold,
                    "quantize_working_pulse: target detuning inside the "
                    "adiabatic threshold");
    const double phi = rotation_angles(g).phi;
    const auto defect = [&](double d) {
        return 2.0 * phase_integral(d, coupling, sweep_rate) - phi;
    };
    const double period =
        kPi / phase_slope(delta_target, coupling, sweep_rate);
    const double k0 = std::round(defect(delta_target) / (2.0 * kPi));

    std::optional<double> best;
    for (double k : {k0 - 1.0, k0, k0 + 1.0}) {
        const auto f = [&](double d) { return defect(d) - 2.0 * kPi * k; };
        // walk down to a point below the root, then bracket upward
        double lo = delta_target;
        int guard = 0;
        while (f(lo) > 0.0 && lo - period > threshold && guard++ < 8) {
            lo -= period;
        }
        if (f(lo) > 0.0) continue;
        const auto bracket = detail::bracket_upward(f, lo, 0.5 * period);
        if (!bracket) continue;
        const double root =
            detail::solve_increasing(f, bracket->first, bracket->second);
        if (root < threshold) continue;
        if (!best || std::abs(root - delta_target) < std::abs(*best - delta_target)) {
            best = root;
        }
    }
    if (!best) {
        throw ConvergenceError("quantize_working_pulse: no root bracketed");
    }
    return LinearSweepPulse::symmetric(g, sweep_rate, *best, threshold_factor);
}

/// Wrapped defect Phi - 2 phi(t_1) of a working pulse (zero when quantized).
inline double working_quantization_defect(const LinearSweepPulse &pulse) {
    const double phi = rotation_angles(pulse.g()).phi;
    return wrap_angle(
        phi - 2.0 * adiabatic_phase(pulse, Endpoint::start));
}

/// Result of solving the compensation conditions for one side.
struct CompensationSolution {
    double rate = 0.0;  ///< pi-pulse sweep rate
    double far = 0.0;   ///< |detuning| of the far endpoint
    std::array<double, 2> residuals{};
};

namespace detail {

// First- and second-order conditions (closed-form phase model). For either
// side, with working endpoint magnitude dw and pi-pulse magnitudes
// near/far:
//   phi_w'(dw)  + phi_pi'(near) - phi_pi'(far) = 0
//   phi_w''(dw) - phi_pi''(near) - phi_pi''(far) = 0
inline std::array<double, 2> full_conditions(double dw, double cw, double rw,
                                             double g_pi, double near,
                                             double rate, double far) {
    const double c_pi = g_pi * std::sqrt(rate);
    return {phase_slope(dw, cw, rw) +
                phase_slope(near, c_pi, rate) -
                phase_slope(far, c_pi, rate),
            phase_curvature(dw, cw, rw) -
                phase_curvature(near, c_pi, rate) -
                phase_curvature(far, c_pi, rate)};
}

}  // namespace detail

/**
 * @brief Solves the compensation conditions for a given near endpoint.
 *
 * simplified: rate_pi = 2 rate_w and |far| = 2 dw + near.
 * full: damped Newton on the exact first- and second-order conditions in
 * (rate_pi, far), started from the simplified solution.
 */
inline CompensationSolution solve_compensation(double dw, double cw, double rw,
                                               double g_pi, double near,
                                               CompensationMethod method) {
    CompensationSolution s{2.0 * rw, 2.0 * dw + near, {}};
    if (method == CompensationMethod::simplified) {
        s.residuals = {s.far - 2.0 * dw - near, s.rate - 2.0 * rw};
        return s;
    }
    const double gp2 = g_pi * g_pi;
    auto residual_norm = [](const std::array<double, 2> &r, double scale) {
        return std::hypot(r[0], r[1] * scale);
    };
    // conditions are O(dw / rate) and O(1 / rate); weight the second by dw
    const double scale = dw;
    std::array<double, 2> f = detail::full_conditions(dw, cw, rw, g_pi, near,
                                                      s.rate, s.far);
    for (int iter = 0; iter < 100; ++iter) {
        const double r = s.rate;
        // pi coupling scales as g_pi sqrt(rate), so E^2 = d^2/4 + g_pi^2 rate
        const auto energy = [&](double d) {
            return std::sqrt(0.25 * d * d + gp2 * r);
        };
        const auto d_slope_d_rate = [&](double d) {
            const double e = energy(d);
            return gp2 / (2.0 * e * r) - e / (r * r);
        };
        const auto d_curv_d_rate = [&](double d) {
            const double e = energy(d);
            return -(d / (4.0 * r * e)) * (1.0 / r + gp2 / (2.0 * e * e));
        };
        const double c_pi = g_pi * std::sqrt(r);
        const double j00 = d_slope_d_rate(near) - d_slope_d_rate(s.far);
        const double j01 = -phase_curvature(s.far, c_pi, r);
        const double j10 = -d_curv_d_rate(near) - d_curv_d_rate(s.far);
        const double j11 = -phase_third(s.far, c_pi, r);
        const double det = j00 * j11 - j01 * j10;
        if (det == 0.0 || !std::isfinite(det)) break;
        const double step_rate = (f[0] * j11 - f[1] * j01) / det;
        const double step_far = (j00 * f[1] - j10 * f[0]) / det;

        const double current = residual_norm(f, scale);
        double lambda = 1.0;
        bool accepted = false;
        for (int k = 0; k < 30; ++k) {
            const double rate_try = r - lambda * step_rate;
            const double far_try = s.far - lambda * step_far;
            if (rate_try > 0.0 && far_try > near) {
                const auto f_try = detail::full_conditions(
                    dw, cw, rw, g_pi, near, rate_try, far_try);
                if (residual_norm(f_try, scale) < current || current == 0.0) {
                    s.rate = rate_try;
                    s.far = far_try;
                    f = f_try;
                    accepted = true;
                    break;
                }
            }
            lambda *= 0.5;
        }
        const bool tiny_step =
            std::abs(step_rate) <= 4e-16 * s.rate &&
            std::abs(step_far) <= 4e-16 * s.far;
        if (!accepted || tiny_step) break;
    }
    s.residuals = f;
    const double tolerance = 1e-12 * (dw / s.rate + 1.0);
    if (!(residual_norm(f, scale) <= tolerance)) {
        std::ostringstream msg;
        msg << "solve_compensation: Newton refinement did not converge "
            << "(residuals " << f[0] << ", " << f[1] << ")";
        throw ConvergenceError(msg.str());
    }
    return s;
}

/// A designed correcting pi-pulse.
struct PiPulseSpec {
    LinearSweepPulse pulse;
    Side side = Side::trailing;
    double g_pi = 0.0;
    double near_bound = 0.0;  ///< lower bound on the near endpoint magnitude
    CompensationMethod method = CompensationMethod::full;
    std::array<double, 2> compensation_residuals{};
    double quantization_defect = 0.0;

    [[nodiscard]] double near() const {
        return side == Side::trailing ? pulse.delta_start()
                                      : -pulse.delta_end();
    }
    [[nodiscard]] double far() const {
        return side == Side::trailing ? -pulse.delta_end()
                                      : pulse.delta_start();
    }
};

/// Wrapped 2 phi_pi(t) + 2 phi_pi(t') - 2 Phi_pi of a pi-pulse.
inline double pi_quantization_defect(const LinearSweepPulse &pulse) {
    const double phi = rotation_angles(pulse.g()).phi;
    return wrap_angle(2.0 * adiabatic_phase(pulse, Endpoint::start) +
                      2.0 * adiabatic_phase(pulse, Endpoint::end) - 2.0 * phi);
}

/**
 * @brief Designs the pi-pulse adjacent to one end of a working pulse.
 *
 * The near endpoint is the smallest magnitude at or above
 * |D_w| sqrt(2) (g_pi / g)^(1/3) for which the pi-pulse phase
 * 2 phi_pi(t) + 2 phi_pi(t') - 2 Phi_pi vanishes mod 2 pi; the far endpoint
 * and pi-pulse rate follow from the compensation conditions.
 */
inline PiPulseSpec design_pi_pulse(const LinearSweepPulse &working, double g_pi,
                                   Side side, const DesignOptions &options = {}) {
    detail::require(working.sweep_sign() > 0,
                    "design_pi_pulse: working pulse must sweep downward");
    detail::require(g_pi > 0.0 && std::isfinite(g_pi),
                    "design_pi_pulse: g_pi must be positive");
    if (std::exp(-kPi * g_pi * g_pi) > options.leakage_budget) {
        std::ostringstream msg;
        msg << "design_pi_pulse: exp(-pi g_pi^2) = "
            << std::exp(-kPi * g_pi * g_pi) << " exceeds leakage budget "
            << options.leakage_budget;
        throw DesignError(msg.str());
    }
    const double dw = std::abs(
        working.delta(side == Side::trailing ? Endpoint::end : Endpoint::start));
    const double cw = working.coupling();
    const double rw = working.abs_rate();
    const double bound =
        dw * std::sqrt(2.0) * std::cbrt(g_pi / working.g());
    const double phi_pi = rotation_angles(g_pi).phi;

    const auto solve = [&](double near) {
        return solve_compensation(dw, cw, rw, g_pi, near, options.compensation);
    };
    const auto defect = [&](double near) {
        const CompensationSolution s = solve(near);
        const double c_pi = g_pi * std::sqrt(s.rate);
        return 2.0 * phase_integral(near, c_pi, s.rate) +
               2.0 * phase_integral(s.far, c_pi, s.rate) - 2.0 * phi_pi;
    };
    const double at_bound = defect(bound);
    const double k = std::ceil(at_bound / (2.0 * kPi));
    const auto f = [&](double near) { return defect(near) - 2.0 * kPi * k; };
    double near = bound;
    if (f(bound) < 0.0) {
        // d(defect)/d(near) ~ (near + far) / rate; step well below a period
        const CompensationSolution s0 = solve(bound);
        const double step = 0.5 * kPi * s0.rate / (bound + s0.far);
        const auto bracket = detail::bracket_upward(f, bound, step);
        if (!bracket) {
            throw ConvergenceError("design_pi_pulse: quantization not bracketed");
        }
        near = detail::solve_increasing(f, bracket->first, bracket->second);
    }
    const CompensationSolution s = solve(near);
    const double c_pi = g_pi * std::sqrt(s.rate);

    std::optional<LinearSweepPulse> pulse;
    try {
        pulse = side == Side::trailing
                    ? LinearSweepPulse(c_pi, s.rate, near, -s.far, 0.0,
                                       options.threshold_factor)
                    : LinearSweepPulse(c_pi, s.rate, s.far, -near, 0.0,
                                       options.threshold_factor);
    } catch (const DomainError &e) {
        throw DesignError(std::string("design_pi_pulse: ") + e.what());
    }
    return {*pulse,  side,       g_pi, bound, options.compensation,
            s.residuals, pi_quantization_defect(*pulse)};
}

/**
 * @brief The designed sequence, placed in time as a contiguous sawtooth.
 */
struct CompositeSequence {
    PiPulseSpec leading;
    LinearSweepPulse working;
    PiPulseSpec trailing;

    /// working, leading pi, trailing pi
    [[nodiscard]] std::array<double, 3> quantization_residuals() const {
        return {working_quantization_defect(working),
                leading.quantization_defect, trailing.quantization_defect};
    }
    [[nodiscard]] double t_begin() const { return leading.pulse.time_start(); }
    [[nodiscard]] double t_end() const { return trailing.pulse.time_end(); }
};

/// Working pulse given; pi-pulses designed on both sides and placed around it.
inline CompositeSequence design_sequence(const LinearSweepPulse &working,
                                         double g_pi,
                                         const DesignOptions &options = {}) {
    PiPulseSpec lead = design_pi_pulse(working, g_pi, Side::leading, options);
    PiPulseSpec trail = design_pi_pulse(working, g_pi, Side::trailing, options);
    lead.pulse = lead.pulse.starting_at(working.time_start() -
                                        lead.pulse.duration());
    trail.pulse = trail.pulse.starting_at(working.time_end());
    return {lead, working, trail};
}

/// Quantized symmetric working pulse (rate 1 units) plus designed pi-pulses.
inline CompositeSequence design_composite(double g, double delta_target,
                                          double g_pi,
                                          const DesignOptions &options = {}) {
    const LinearSweepPulse working = quantize_working_pulse(
        g, delta_target, 1.0, options.threshold_factor);
    return design_sequence(working, g_pi, options);
}

}  // namespace lzgate
