// Copyright 2026 The jpoim Authors
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

#include "jpoim/circuit_params.h"

#include <gtest/gtest.h>

#include <cmath>

#include "jpoim/errors.h"

namespace jpoim::circuit {
namespace {

constexpr double kTwoPi = 2.0 * kPi;

SquidParams reference_squid() {
    return {7.5e-12, 7.5e-12, 80e-6, 80e-6};
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    return ErrorKind::kNumerical;
}

TEST(JunctionTest, InductanceValues) {
    const double independent = 2.067833848e-15 / (2.0 * 3.141592653589793 * 160e-6);
    EXPECT_NEAR(jj_inductance(160e-6), independent, 1e-12 * independent);
    EXPECT_NEAR(jj_inductance(160e-6), 2.057e-12, 5e-4 * 2.057e-12);
    EXPECT_NEAR(jj_inductance(kFluxQuantum / kTwoPi), 1.0, 1e-15);
    EXPECT_DOUBLE_EQ(jj_inductance(2.0 * 37e-6), 0.5 * jj_inductance(37e-6));
    EXPECT_THROW(jj_inductance(0.0), InvalidArgument);
    EXPECT_THROW(jj_inductance(-1e-6), InvalidArgument);
}

TEST(SquidTest, ZeroFluxEqualsCombinedJunction) {
    const SquidParams s = reference_squid();
    EXPECT_DOUBLE_EQ(squid_inductance(s, 0.0), jj_inductance(160e-6));
}

TEST(SquidTest, ThirdOfFluxQuantumDoublesInductance) {
    const SquidParams s = reference_squid();
    const double ratio = squid_inductance(s, kFluxQuantum / 3.0) / squid_inductance(s, 0.0);
    EXPECT_NEAR(ratio, 2.0, 2e-12);
}

TEST(SquidTest, PeriodicAndEvenInFlux) {
    const SquidParams s = reference_squid();
    for (double phi : {0.1, 0.27, -0.4}) {
        const double base = squid_inductance(s, phi * kFluxQuantum);
        EXPECT_NEAR(squid_inductance(s, (phi + 1.0) * kFluxQuantum), base, 1e-9 * base);
        EXPECT_NEAR(squid_inductance(s, -phi * kFluxQuantum), base, 1e-12 * base);
    }
}

TEST(SquidTest, DivergesAtHalfFluxQuantum) {
    const SquidParams s = reference_squid();
    EXPECT_EQ(kind_of([&] { squid_inductance(s, 0.5 * kFluxQuantum); }), ErrorKind::kDivergence);
    EXPECT_EQ(kind_of([&] { squid_inductance(s, -1.5 * kFluxQuantum); }), ErrorKind::kDivergence);
    EXPECT_NO_THROW(squid_inductance(s, 0.49 * kFluxQuantum));
}

TEST(ResonanceTest, LargeResonatorInductanceApproachesBareFrequency) {
    const SquidParams s = reference_squid();
    const double omega_r = kTwoPi * 7e9;
    EXPECT_NEAR(resonance_frequency({omega_r, 1e6, 1e-12}, s, s.l1, 0.0), omega_r, 1e-9 * omega_r);
}

TEST(ResonanceTest, CalibrationHitsTarget) {
    const SquidParams s = reference_squid();
    const double omega_r = kTwoPi * 7e9;
    const double target = kTwoPi * 7.5e9;
    const double l_r = calibrate_resonator(target, omega_r, s, s.l1);
    EXPECT_NEAR(resonance_frequency({omega_r, l_r, 4.5e-12}, s, s.l1, 0.0), target, 1e-12 * target);
    EXPECT_EQ(kind_of([&] { calibrate_resonator(omega_r, omega_r, s, s.l1); }), ErrorKind::kInfeasibleCalibration);
    EXPECT_EQ(kind_of([&] { calibrate_resonator(0.9 * omega_r, omega_r, s, s.l1); }),
              ErrorKind::kInfeasibleCalibration);
}

TEST(ResonanceTest, FluxShiftFollowsInductanceChange) {
    const SquidParams s = reference_squid();
    const ResonatorParams res{kTwoPi * 7e9, 80e-12, 4.5e-12};
    const double shift = resonance_frequency(res, s, s.l1, kFluxQuantum / 3.0) - resonance_frequency(res, s, s.l1, 0.0);
    const double expected = res.omega_r * (squid_inductance(s, kFluxQuantum / 3.0) - squid_inductance(s, 0.0)) / res.l_r;
    EXPECT_NEAR(shift, expected, 1e-9 * std::abs(expected));
}

TEST(ResonanceTest, PumpIsTwiceResonance) {
    EXPECT_EQ(pump_frequency(kTwoPi * 7.5e9), kTwoPi * 15e9);
}

TEST(FluxSweepTest, FlagsDivergentSamples) {
    const SquidParams s = reference_squid();
    const ResonatorParams res{kTwoPi * 7e9, 80e-12, 4.5e-12};
    const auto samples = flux_sweep(res, s, s.l1, kFluxQuantum, {-0.5, 0.5, 3});
    ASSERT_EQ(samples.size(), 3u);
    EXPECT_TRUE(samples[0].diverged);
    EXPECT_FALSE(samples[1].diverged);
    EXPECT_TRUE(samples[2].diverged);
    EXPECT_DOUBLE_EQ(samples[1].omega0, resonance_frequency(res, s, s.l1, 0.0));
}

TEST(CurrentRangeTest, ValuesIncludeEndpoints) {
    const auto v = CurrentRange{-1.0, 1.0, 5}.values();
    EXPECT_EQ(v, (std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0}));
    EXPECT_EQ(CurrentRange({2.0, 3.0, 1}).values(), std::vector<double>{2.0});
    EXPECT_THROW(CurrentRange({0.0, 1.0, 0}).values(), InvalidArgument);
}

TEST(RsjTest, BackboneValues) {
    const JunctionParams j{160e-6, 15.0};
    EXPECT_EQ(rsj_voltage(j, 100e-6), 0.0);
    EXPECT_EQ(rsj_voltage(j, -160e-6), 0.0);
    EXPECT_NEAR(rsj_voltage(j, 320e-6), 15.0 * std::sqrt(3.0) * 160e-6, 1e-15);
    EXPECT_NEAR(rsj_voltage(j, -320e-6), -15.0 * std::sqrt(3.0) * 160e-6, 1e-15);
}

TEST(RsjTest, ZeroTemperatureCurveIsBackbone) {
    const JunctionParams j{160e-6, 15.0};
    const CurrentRange range{-480e-6, 480e-6, 41};
    for (const IvSample &s : rsj_iv_curve(j, 0.0, range, 1)) {
        EXPECT_EQ(s.voltage, rsj_voltage(j, s.current));
    }
}

TEST(RsjTest, NoisyCurveIsSeededAndRoundsKnee) {
    const JunctionParams j{160e-6, 15.0};
    const CurrentRange range{-480e-6, 480e-6, 201};
    const auto a = rsj_iv_curve(j, 4.2, range, 9, 1e-6);
    const auto b = rsj_iv_curve(j, 4.2, range, 9, 1e-6);
    ASSERT_EQ(a.size(), b.size());
    bool differs_from_backbone = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].voltage, b[k].voltage);
        differs_from_backbone |= a[k].voltage != rsj_voltage(j, a[k].current);
    }
    EXPECT_TRUE(differs_from_backbone);
    EXPECT_THROW(rsj_iv_curve(j, -1.0, range, 1), InvalidArgument);
}

TEST(CircuitConfigTest, DefaultsAndJsonRoundTrip) {
    const CircuitConfig def = default_circuit_config();
    EXPECT_NEAR(resonance_frequency(def.resonator, def.squid, def.squid.l1, 0.0), kTwoPi * 7.5e9,
                1e-9 * kTwoPi * 7.5e9);
    const CircuitConfig back = circuit_config_from_json(circuit_config_to_json(def));
    EXPECT_DOUBLE_EQ(back.resonator.l_r, def.resonator.l_r);
    EXPECT_EQ(back.sweep.points, def.sweep.points);
    EXPECT_EQ(back.junction.i_c, def.junction.i_c);

    const CircuitConfig shipped =
        circuit_config_from_json(io::read_json_file(std::string(JPOIM_SOURCE_DIR) + "/configs/circuit.json"));
    EXPECT_NEAR(resonance_frequency(shipped.resonator, shipped.squid, shipped.squid.l1, 0.0), kTwoPi * 7.5e9,
                1e-9 * kTwoPi * 7.5e9);
}

}  // namespace
}  // namespace jpoim::circuit
