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

// Numerical propagation of i d/dt psi = H(t) psi with
// H(t) = (D(t)/2) Z + coupling(t) X in the computational basis. No
// adiabatic approximation is made.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "lzgate/analytic/adiabatic_frame.hpp"
#include "lzgate/core/complex2x2.hpp"
#include "lzgate/core/errors.hpp"
#include "lzgate/propagator/profile.hpp"

namespace lzgate {

struct EvolveOptions {
    double tol = 1e-10;          ///< target global error, spectral norm
    double step_phase = 0.1;     ///< initial bound on max(E) * dt, radians
    int max_refinements = 24;    ///< step halvings before giving up
};

struct Propagation {
    Complex2x2 unitary = Complex2x2::identity();
    double error_estimate = 0.0;
    std::uint64_t steps = 0;
};

namespace detail {

// Product of n midpoint exponentials exp(-i H(t_mid) dt) over [a, b].
inline Complex2x2 midpoint_product(const ProfileSegment &seg, double a,
                                   double b, std::uint64_t n) {
    const double dt = (b - a) / static_cast<double>(n);
    const double slope = seg.slope();
    const double hx = seg.coupling * dt;
    Complex2x2 u = Complex2x2::identity();
    for (std::uint64_t k = 0; k < n; ++k) {
        const double tm = a + (static_cast<double>(k) + 0.5) * dt;
        const double delta = seg.delta_begin + slope * (tm - seg.t_begin);
        u = exp_pauli(hx, 0.0, 0.5 * delta * dt) * u;
    }
    return u;
}

}  // namespace detail

/**
 * @brief U(t_end, t_start) by midpoint exponentials with step halving.
 *
 * Each segment starts from max(E) dt <= step_phase and halves the step until
 * the Richardson estimate ||U_{n} - U_{2n}|| / 3 of a second-order method is
 * below the segment's share of tol (proportional to its duration). The
 * finer product is returned, so the result is unitary to rounding.
 */
inline Propagation evolve_report(const DetuningProfile &profile, double t_start,
                                 double t_end, const EvolveOptions &options = {}) {
    detail::require(options.tol >= 1e-12 && options.tol <= 1e-6,
                    "evolve: tol must lie in [1e-12, 1e-6]");
    detail::require(options.step_phase > 0.0, "evolve: step_phase must be positive");
    const double eps_t = 1e-12 * std::max(1.0, std::abs(profile.t_end()));
    if (t_start < profile.t_begin() - eps_t || t_end > profile.t_end() + eps_t ||
        t_end < t_start) {
        std::ostringstream msg;
        msg << "evolve: interval [" << t_start << ", " << t_end
            << "] outside profile domain [" << profile.t_begin() << ", "
            << profile.t_end() << "]";
        throw DomainError(msg.str());
    }
    Propagation out;
    const double total = t_end - t_start;
    if (total == 0.0) return out;

    for (const auto &seg : profile.segments()) {
        const double a = std::max(seg.t_begin, t_start);
        const double b = std::min(seg.t_end, t_end);
        if (b <= a) continue;
        const double share = options.tol * (b - a) / total;
        const double max_energy =
            std::max(adiabatic_energy(seg.delta_at(a), seg.coupling),
                     adiabatic_energy(seg.delta_at(b), seg.coupling));
        auto n = static_cast<std::uint64_t>(
            std::ceil(max_energy * (b - a) / options.step_phase));
        n = std::max<std::uint64_t>(n, 1);

        Complex2x2 coarse = detail::midpoint_product(seg, a, b, n);
        bool converged = false;
        for (int level = 0; level < options.max_refinements; ++level) {
            const Complex2x2 fine = detail::midpoint_product(seg, a, b, 2 * n);
            const double estimate = spectral_norm(fine - coarse) / 3.0;
            n *= 2;
            coarse = fine;
            if (estimate <= share) {
                out.error_estimate += estimate;
                converged = true;
                break;
            }
        }
        if (!converged) {
            std::ostringstream msg;
            msg << "evolve: step halving stalled on [" << a << ", " << b
                << "] at " << n << " steps";
            throw ConvergenceError(msg.str());
        }
        out.unitary = coarse * out.unitary;
        out.steps += n;
    }
    return out;
}

inline Complex2x2 evolve(const DetuningProfile &profile, double t_start,
                         double t_end, const EvolveOptions &options = {}) {
    return evolve_report(profile, t_start, t_end, options).unitary;
}

/// V^dagger(D_final) U V(D_initial): the propagator in the modified
/// adiabatic basis. Couplings may differ at the two ends.
inline Complex2x2 to_adiabatic(const Complex2x2 &u, double delta_initial,
                               double delta_final, double coupling_initial,
                               double coupling_final) {
    const Complex2x2 v_in =
        adiabatic_frame(delta_initial, coupling_initial).basis_change();
    const Complex2x2 v_out =
        adiabatic_frame(delta_final, coupling_final).basis_change();
    return v_out.adjoint() * u * v_in;
}

inline Complex2x2 to_adiabatic(const Complex2x2 &u, double delta_initial,
                               double delta_final, double coupling) {
    return to_adiabatic(u, delta_initial, delta_final, coupling, coupling);
}

}  // namespace lzgate
