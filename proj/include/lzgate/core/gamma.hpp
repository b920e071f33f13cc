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
#include <complex>

#include "lzgate/core/complex2x2.hpp"
#include "lzgate/core/errors.hpp"

namespace lzgate {

namespace detail {

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficient set).
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,   -1259.1392167224028,
    771.32342877765313,      -176.61502916214059, 12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,
    1.5056327351493116e-7};

}  // namespace detail

/**
 * @brief Log-gamma for Re(z) > 0.
 *
 * Returns the branch of log Gamma(z) that is continuous in the right
 * half-plane and real on the positive axis (the imaginary part is not
 * wrapped into (-pi, pi]).
 */
inline cdouble log_gamma(cdouble z) {
    if (!(z.real() > 0.0) || !std::isfinite(z.imag())) {
        throw DomainError("log_gamma: requires Re(z) > 0");
    }
    if (z.real() < 1.0) {
        // Gamma(z) = Gamma(z + 1) / z keeps the series on Re >= 1
        return log_gamma(z + 1.0) - std::log(z);
    }
    const cdouble x = z - 1.0;
    cdouble series = detail::kLanczosCoefficients[0];
    for (std::size_t k = 1; k < detail::kLanczosCoefficients.size(); ++k) {
        series += detail::kLanczosCoefficients[k] / (x + static_cast<double>(k));
    }
    const cdouble t = x + detail::kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * kPi) + (x + 0.5) * std::log(t) - t +
           std::log(series);
}

/// log Gamma(i y) for y > 0. Accurate to ~1e-13 absolute on [1e-4, 16].
inline cdouble log_gamma_imag(double y) {
    if (!(y > 0.0) || !std::isfinite(y)) {
        throw DomainError("log_gamma_imag: requires y > 0");
    }
    const cdouble iy(0.0, y);
    return log_gamma(1.0 + iy) - std::log(iy);
}

/// arg Gamma(i y), continuous in y.
inline double arg_gamma_imag(double y) { return log_gamma_imag(y).imag(); }

}  // namespace lzgate
