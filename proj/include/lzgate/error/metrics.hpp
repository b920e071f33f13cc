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
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lzgate/analytic/scattering.hpp"
#include "lzgate/composite/compose.hpp"
#include "lzgate/composite/design.hpp"
#include "lzgate/core/complex2x2.hpp"
#include "lzgate/core/errors.hpp"

namespace lzgate {

/// Inputs to gate_error must be unitary to this tolerance.
inline constexpr double kGateErrorUnitaryTolerance = 1e-9;

/**
 * @brief Gate error ||(+-S) - S_ideal||_2.
 *
 * negate compares -S with the ideal gate, as needed for sequences whose
 * error-free product carries an overall minus sign.
 */
inline double gate_error(const Complex2x2 &s, const Complex2x2 &ideal,
                         bool negate = false) {
    for (const Complex2x2 *m : {&s, &ideal}) {
        if (!is_unitary(*m, kGateErrorUnitaryTolerance)) {
            std::ostringstream msg;
            msg << "gate_error: operand not unitary (defect "
                << unitarity_defect(*m) << ")";
            throw DomainError(msg.str());
        }
    }
    return spectral_norm((negate ? -s : s) - ideal);
}

/**
 * @brief Error of Rz(-2 d2) Rx(alpha) Rz(2 d1) relative to Rx(alpha):
 * sqrt(2) |1 - n_x1 n_x2 - n_y1 n_y2 cos(alpha)|^(1/2) with
 * n_i = (cos d_i, sin d_i).
 */
inline double uncorrected_error_analytic(double dphi_start, double dphi_end,
                                         double alpha) {
    // Equal to cos^2(alpha/2) (1 - cos(d1 - d2)) + sin^2(alpha/2) (1 -
    // cos(d1 + d2)): a sum of non-negative terms, so no cancellation.
    const double minus = std::sin(0.5 * (dphi_start - dphi_end));
    const double plus = std::sin(0.5 * (dphi_start + dphi_end));
    const double c = std::cos(0.5 * alpha);
    const double s = std::sin(0.5 * alpha);
    const double value = 2.0 * (c * c * minus * minus + s * s * plus * plus);
    return std::sqrt(2.0) * std::sqrt(std::abs(value));
}

/// Analytic error of a quantized single pulse under offset eps.
inline double single_error_analytic(const LinearSweepPulse &pulse,
                                    double offset, OffsetModel model) {
    return uncorrected_error_analytic(
        phase_offset(pulse, Endpoint::start, offset, model),
        phase_offset(pulse, Endpoint::end, offset, model),
        rotation_angles(pulse.g()).alpha);
}

/// Analytic composite error: the single-pulse formula with each working
/// phase error replaced by its corrected value.
inline double composite_error_analytic(const CompositeSequence &seq,
                                       double offset, OffsetModel model) {
    return uncorrected_error_analytic(
        corrected_phase_error(seq, Endpoint::start, offset, model),
        corrected_phase_error(seq, Endpoint::end, offset, model),
        rotation_angles(seq.working.g()).alpha);
}

struct ErrorSweepRow {
    double eps = 0.0;
    double eps_over_gamma = 0.0;
    double error_single = 0.0;
    double error_composite = 0.0;
    EvaluationMode mode = EvaluationMode::exact;
};

/// count log-spaced points eps/gamma in [lo, hi].
inline std::vector<double> log_grid(double lo, double hi, std::size_t count) {
    detail::require(lo > 0.0 && hi >= lo && count >= 1,
                    "log_grid: need 0 < lo <= hi and count >= 1");
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double f =
            count == 1 ? 0.0
                       : static_cast<double>(i) / static_cast<double>(count - 1);
        out[i] = lo * std::pow(hi / lo, f);
    }
    return out;
}

/// Default offset grid: 60 points, eps/gamma in [1e-3, 1].
inline std::vector<double> default_eps_over_gamma_grid() {
    return log_grid(1e-3, 1.0, 60);
}

/**
 * @brief Gate errors of the single working pulse and of the composite over
 * an offset grid (absolute offsets).
 *
 * The ideal gate is Rx(alpha) of the working pulse; the composite is
 * compared with its sign flipped. Rows are ordered as the grid.
 */
inline std::vector<ErrorSweepRow> error_sweep(
    const CompositeSequence &seq, std::span<const double> eps_grid,
    EvaluationMode mode, const EvolveOptions &evolve_options = {1e-9, 0.1, 24}) {
    const Complex2x2 ideal = rx(rotation_angles(seq.working.g()).alpha);
    const double gamma = seq.working.coupling();
    std::vector<ErrorSweepRow> rows;
    rows.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        const Complex2x2 single =
            pulse_matrix(seq.working, eps, mode, evolve_options);
        const Complex2x2 composite = compose(seq, eps, mode, evolve_options);
        rows.push_back({eps, eps / gamma, gate_error(single, ideal, false),
                        gate_error(composite, ideal, true), mode});
    }
    return rows;
}

inline std::vector<ErrorSweepRow> error_sweep(
    double working_g, double delta_target, double g_pi,
    std::span<const double> eps_grid, EvaluationMode mode,
    const DesignOptions &design_options = {},
    const EvolveOptions &evolve_options = {1e-9, 0.1, 24}) {
    const CompositeSequence seq =
        design_composite(working_g, delta_target, g_pi, design_options);
    return error_sweep(seq, eps_grid, mode, evolve_options);
}

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    std::size_t points = 0;
};

/// Least-squares slope of log(y) against log(x) over x in [lo, hi].
inline SlopeFit loglog_slope(std::span<const double> x,
                             std::span<const double> y, double lo, double hi) {
    detail::require(x.size() == y.size(), "loglog_slope: size mismatch");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lo || x[i] > hi || !(y[i] > 0.0)) continue;
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++n;
    }
    detail::require(n >= 2, "loglog_slope: fewer than two points in window");
    const double dn = static_cast<double>(n);
    const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
    return {slope, (sy - slope * sx) / dn, lo, hi, n};
}

}  // namespace lzgate
