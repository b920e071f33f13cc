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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "lzgate/analytic/adiabatic_frame.hpp"
#include "lzgate/analytic/phases.hpp"
#include "lzgate/analytic/pulse.hpp"
#include "lzgate/analytic/scattering.hpp"
#include "lzgate/composite/design.hpp"

using namespace lzgate;

namespace {

// Random valid pulse in either sweep direction.
LinearSweepPulse random_pulse(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double g = 0.1 + 2.9 * u(rng);
    const double rate = (0.3 + 3.0 * u(rng)) * (u(rng) < 0.5 ? -1.0 : 1.0);
    const double coupling = g * std::sqrt(std::abs(rate));
    const double floor =
        kDefaultThresholdFactor * std::max(coupling, std::sqrt(std::abs(rate)));
    const double sign = rate > 0 ? 1.0 : -1.0;
    return {coupling, rate, sign * (floor + 40.0 * u(rng)),
            -sign * (floor + 40.0 * u(rng)), 10.0 * (u(rng) - 0.5)};
}

}  // namespace

TEST(AdiabaticFrame, DetuningTwiceCoupling) {
    const auto f = adiabatic_frame(2.0, 1.0);
    EXPECT_NEAR(f.energy, std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::cos(f.theta), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(f.theta, kPi / 4, 1e-15);
    EXPECT_NEAR(adiabatic_frame(-2.0, 1.0).theta, -kPi / 4, 1e-15);
}

TEST(AdiabaticFrame, FarDetuningApproachesComputationalBasis) {
    const auto f = adiabatic_frame(1e6, 1.0);
    EXPECT_GT(f.theta, 0.0);
    EXPECT_LT(f.theta, 1e-5);
    EXPECT_LE(max_entry_deviation(f.basis_change(), Complex2x2::identity()), 1e-6);
    EXPECT_LE(max_entry_deviation(adiabatic_frame(-1e6, 1.0).basis_change(),
                                  Complex2x2::identity()),
              1e-6);
}

TEST(AdiabaticFrame, EigenvectorsAndOrthonormality) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int k = 0; k < 200; ++k) {
        const double d = u(rng), c = 0.01 + std::abs(u(rng));
        const auto f = adiabatic_frame(d, c);
        const Complex2x2 v = f.basis_change();
        EXPECT_LE(max_entry_deviation(v.adjoint() * v, Complex2x2::identity()),
                  1e-14);
        EXPECT_GE(f.energy, c);
        EXPECT_NEAR(std::cos(f.theta), std::abs(d) / (2 * f.energy), 1e-14);
        // H psi_0 = sgn(D) E psi_0
        const Complex2x2 h = (0.5 * d) * pauli_z() + c * pauli_x();
        const auto hp = apply_matrix(h, f.psi0());
        const double s = d > 0 ? 1.0 : -1.0;
        EXPECT_NEAR(std::abs(hp[0] - s * f.energy * f.psi0()[0]), 0.0,
                    1e-12 * f.energy);
        EXPECT_NEAR(std::abs(hp[1] - s * f.energy * f.psi0()[1]), 0.0,
                    1e-12 * f.energy);
    }
}

TEST(AdiabaticFrame, RejectsZeroDetuning) {
    EXPECT_THROW(adiabatic_frame(0.0, 1.0), DomainError);
    EXPECT_THROW(adiabatic_frame(1.0, 0.0), DomainError);
}

TEST(Pulse, ValidationAndGeometry) {
    const LinearSweepPulse p(1.0, 2.0, 10.0, -6.0, 1.0);
    EXPECT_DOUBLE_EQ(p.g(), 1.0 / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(p.time_start(), 1.0 - 5.0);
    EXPECT_DOUBLE_EQ(p.time_end(), 1.0 + 3.0);
    EXPECT_DOUBLE_EQ(p.detuning_at(p.time_start()), 10.0);
    EXPECT_DOUBLE_EQ(p.detuning_at(p.time_end()), -6.0);
    EXPECT_DOUBLE_EQ(p.starting_at(0.0).time_start(), 0.0);

    EXPECT_THROW(LinearSweepPulse(1.0, 1.0, 10.0, 5.0), DomainError);
    EXPECT_THROW(LinearSweepPulse(1.0, -1.0, 10.0, -10.0), DomainError);
    EXPECT_THROW(LinearSweepPulse(0.0, 1.0, 10.0, -10.0), DomainError);
    EXPECT_THROW(LinearSweepPulse(1.0, 1.0, 2.0, -10.0), DomainError);
    EXPECT_NO_THROW(LinearSweepPulse(1.0, 1.0, 2.0, -10.0, 0.0, 1.5));
    EXPECT_THROW(p.require_offset_valid(6.5), DomainError);
    EXPECT_THROW(p.require_offset_valid(-10.0), DomainError);
    EXPECT_NO_THROW(p.require_offset_valid(5.9));
}

// (1/rate) integral_0^D sqrt(x^2/4 + c^2) dx, mpmath at 30 digits.
struct PhaseCase {
    double coupling, rate, delta, phase;
};
constexpr PhaseCase kPhaseOracle[] = {
    {1.0, 1.0, 10.0, 27.80753590923667677},
    {0.3, 1.0, 10.0, 25.360630674363370226},
    {3.0, 2.0, 20.0, 60.836566668996140153},
};

TEST(Phases, ExactIntegralMatchesOracle) {
    for (const auto &c : kPhaseOracle) {
        const LinearSweepPulse p(c.coupling, c.rate, c.delta, -c.delta);
        for (auto e : {Endpoint::start, Endpoint::end}) {
            EXPECT_NEAR(adiabatic_phase(p, e, 0.0, PhaseMethod::antiderivative),
                        c.phase, 2e-14 * c.phase);
            EXPECT_NEAR(adiabatic_phase(p, e, 0.0, PhaseMethod::quadrature),
                        c.phase, 1e-12 * c.phase);
        }
    }
}

TEST(Phases, SeriesAgreesWithQuadrature) {
    const auto p = LinearSweepPulse::symmetric(1.0, 1.0, 10.0);
    const double series = adiabatic_phase(p, Endpoint::end, 0.0, PhaseMethod::closed_form);
    const double quad = adiabatic_phase(p, Endpoint::end, 0.0, PhaseMethod::quadrature);
    EXPECT_LE(std::abs(series - quad), 1e-4);
    // the residual is the first omitted term, -g^6 r^2 / (2 D^4)
    EXPECT_NEAR(series - quad, 1.0 / (2.0 * 1e4), 2e-6);
}

TEST(Phases, FreeEvolutionLimit) {
    const LinearSweepPulse p(1e-6, 1.0, 4.0, -7.0, 0.0, 1.0);
    EXPECT_NEAR(adiabatic_phase(p, Endpoint::start), 16.0 / 4.0, 1e-10);
    EXPECT_NEAR(adiabatic_phase(p, Endpoint::end), 49.0 / 4.0, 1e-10);
}

TEST(Phases, OffsetShiftsMatchQuadrature) {
    // quadrature over the shifted ramp is independent of the closed forms
    std::mt19937_64 rng(12);
    for (int k = 0; k < 50; ++k) {
        const LinearSweepPulse p = random_pulse(rng);
        const double eps = 0.5 * p.coupling() * (2.0 * (k % 2) - 1.0);
        for (auto e : {Endpoint::start, Endpoint::end}) {
            const double shifted = adiabatic_phase(p, e, eps, PhaseMethod::quadrature) -
                                   adiabatic_phase(p, e, 0.0, PhaseMethod::quadrature);
            EXPECT_NEAR(phase_offset_exact(p, e, eps), shifted,
                        1e-11 * std::max(1.0, std::abs(shifted)));
        }
    }
}

TEST(Phases, PerturbativeDirectEvaluation) {
    const auto p = LinearSweepPulse::symmetric(1.0, 1.0, 10.0);
    const double e = std::sqrt(26.0);
    EXPECT_NEAR(phase_offset_perturbative(p, Endpoint::start, 0.1),
                e * 0.1 + 10.0 / (8.0 * e) * 0.01, 1e-15);
    EXPECT_NEAR(phase_offset_perturbative(p, Endpoint::end, 0.1),
                -e * 0.1 + 10.0 / (8.0 * e) * 0.01, 1e-15);
    EXPECT_EQ(phase_offset_perturbative(p, Endpoint::end, 0.0), 0.0);
    EXPECT_LT(phase_offset_perturbative(p, Endpoint::end, 1e-3), 0.0);
}

TEST(Phases, PerturbativeAgreesWithQuadratureToThirdOrder) {
    const auto p = LinearSweepPulse::symmetric(1.0, 1.0, 10.0);
    const double eps = 1e-2;
    for (auto e : {Endpoint::start, Endpoint::end}) {
        const double quad = adiabatic_phase(p, e, eps, PhaseMethod::quadrature) -
                            adiabatic_phase(p, e, 0.0, PhaseMethod::quadrature);
        const double energy = adiabatic_energy(10.0, 1.0);
        EXPECT_LE(std::abs(quad - phase_offset_perturbative(p, e, eps)),
                  1e-6 * eps * energy);
    }
}

TEST(Phases, ThirdOrderRemainderRatioIsStable) {
    // (exact - second order) / eps^3 -> sgn(D) phi''' / 6
    const auto p = LinearSweepPulse::symmetric(1.0, 1.0, 10.0);
    for (auto e : {Endpoint::start, Endpoint::end}) {
        const double d = p.delta(e);
        const double expected =
            (d > 0 ? 1.0 : -1.0) * phase_third(std::abs(d), 1.0, 1.0) / 6.0;
        for (double r : {1e-2, 1e-3, 1e-4}) {
            const double eps = r * p.coupling();
            const double remainder = phase_offset_exact(p, e, eps) -
                                     phase_offset_perturbative(p, e, eps);
            EXPECT_NEAR(remainder / (eps * eps * eps), expected,
                        0.05 * std::abs(expected))
                << "eps/gamma=" << r;
        }
    }
}

TEST(Phases, DerivativesMatchFiniteDifferences) {
    for (double d : {3.0, 10.0, 40.0}) {
        const double c = 1.3, r = 0.7, h = 1e-4;
        const auto step = [&](double s) { return phase_integral_shift(d, s, c, r); };
        EXPECT_NEAR(phase_slope(d, c, r), (step(h) - step(-h)) / (2 * h), 1e-7);
        EXPECT_NEAR(phase_curvature(d, c, r), (step(h) + step(-h)) / (h * h),
                    1e-6);
        EXPECT_NEAR(phase_third(d, c, r),
                    (phase_curvature(d + h, c, r) - phase_curvature(d - h, c, r)) /
                        (2 * h),
                    1e-8);
    }
}

TEST(Phases, ShiftFormulaIsCancellationFree) {
    const double d = 30.0, c = 3.0, r = 2.0;
    for (double s : {1e-12, 1e-8, 1e-3, 2.0, -5.0}) {
        const double slope = phase_slope(d, c, r);
        const double curv = phase_curvature(d, c, r);
        const double shift = phase_integral_shift(d, s, c, r);
        if (std::abs(s) < 1e-6) {
            EXPECT_NEAR(shift, slope * s + 0.5 * curv * s * s, 1e-15 * std::abs(slope * s));
        } else {
            EXPECT_NEAR(shift, phase_integral(d + s, c, r) - phase_integral(d, c, r),
                        1e-12 * std::max(1.0, std::abs(shift)));
        }
    }
}

TEST(RotationAngles, HalfPiGate) {
    const double g = std::sqrt(std::log(2.0) / (2.0 * kPi));
    EXPECT_NEAR(g, 0.332, 1e-3);
    EXPECT_NEAR(rotation_angles(g).alpha, kPi / 2, 1e-14);
}

TEST(RotationAngles, LargeCouplingApproachesPi) {
    const double g = 2.0;
    const double gap = kPi - rotation_angles(g).alpha;
    EXPECT_NEAR(gap, 2.0 * std::exp(-kPi * g * g), 0.1 * 2.0 * std::exp(-kPi * g * g));
}

TEST(RotationAngles, SmallCouplingLimit) {
    const double g = 1e-3;
    const auto a = rotation_angles(g);
    EXPECT_NEAR(a.alpha, std::sqrt(8.0 * kPi) * g, 1e-3 * std::sqrt(8.0 * kPi) * g);
    EXPECT_NEAR(a.phi, kPi / 4, 1e-4);
    EXPECT_THROW(rotation_angles(0.0), DomainError);
}

TEST(RotationAngles, AlphaIncreasingAndPhiContinuous) {
    // pi - alpha = 2 exp(-pi g^2) drops below the spacing of doubles near pi
    // at g ~ 3.4; beyond that alpha is pi to working precision
    double prev_alpha = 0.0, prev_phi = rotation_angles(0.01).phi;
    for (double g = 0.01; g <= 4.0; g += 0.01) {
        const auto a = rotation_angles(g);
        if (2.0 * std::exp(-kPi * g * g) > 1e-14) {
            EXPECT_GT(a.alpha, prev_alpha) << "g=" << g;
        } else {
            EXPECT_GE(a.alpha, prev_alpha) << "g=" << g;
            EXPECT_LE(a.alpha, kPi);
        }
        EXPECT_LT(std::abs(a.phi - prev_phi), 0.3) << "g=" << g;
        prev_alpha = a.alpha;
        prev_phi = a.phi;
    }
}

TEST(Scattering, ModuliDependOnlyOnCoupling) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 200; ++k) {
        const LinearSweepPulse p = random_pulse(rng);
        const Complex2x2 s = scattering_matrix(p);
        const double g2 = p.g_squared();
        EXPECT_NEAR(std::abs(s(0, 0)), std::exp(-kPi * g2), 1e-13);
        EXPECT_NEAR(std::abs(s(1, 1)), std::exp(-kPi * g2), 1e-13);
        EXPECT_NEAR(std::abs(s(0, 1)), std::sqrt(-std::expm1(-2 * kPi * g2)), 1e-13);
        EXPECT_LE(unitarity_defect(s), 1e-12);
        EXPECT_NEAR(std::abs(s.determinant()), 1.0, 1e-12);
        // offsets enter only through phases
        const Complex2x2 shifted = scattering_matrix(p, 0.3 * p.coupling());
        for (int i = 0; i < 4; ++i) {
            EXPECT_NEAR(std::abs(shifted.entries()[i]), std::abs(s.entries()[i]),
                        1e-14);
        }
    }
}

TEST(Scattering, LeakageBelowBudgetForLargeCoupling) {
    const auto p = LinearSweepPulse::symmetric(1.92, 1.0, 10.0);
    EXPECT_LT(std::abs(scattering_matrix(p)(0, 0)), 1e-5);
}

TEST(Scattering, RotationFormEqualsMatrixForm) {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const LinearSweepPulse p = random_pulse(rng);
        const double eps = 0.5 * p.coupling() * u(rng);
        for (auto model : {OffsetModel::perturbative, OffsetModel::exact}) {
            worst = std::max(worst, max_entry_deviation(scattering_matrix(p, eps, model),
                                                        rotation_form(p, eps, model)));
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(Scattering, ReversedSweepIsTranspose) {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 100; ++k) {
        const LinearSweepPulse p = random_pulse(rng);
        const LinearSweepPulse rev(p.coupling(), -p.sweep_rate(), p.delta_end(),
                                   p.delta_start());
        EXPECT_LE(max_entry_deviation(scattering_matrix(rev),
                                      scattering_matrix(p).transpose()),
                  1e-12);
    }
}

TEST(Scattering, QuantizedSymmetricPulseIsPureRx) {
    for (double g : {0.3, 1.0, 2.0}) {
        const LinearSweepPulse p = quantize_working_pulse(g, 10.0);
        EXPECT_LE(max_entry_deviation(rotation_form(p), rx(rotation_angles(g).alpha)),
                  1e-10);
    }
}
