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

#ifndef JPOIM_CIRCUIT_PARAMS_H
#define JPOIM_CIRCUIT_PARAMS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "jpoim/problem_io.h"

namespace jpoim::circuit {

// SI units throughout.
inline constexpr double kFluxQuantum = 2.067833848e-15;  // Wb
inline constexpr double kBoltzmann = 1.380649e-23;       // J/K
inline constexpr double kPi = 3.14159265358979323846;

/// Distance from a half-integer flux quantum below which the SQUID
/// inductance is treated as divergent, as a fraction of the flux quantum.
inline constexpr double kDivergenceGuard = 1e-6;

struct JunctionParams {
    double i_c;      // A
    double r_shunt;  // Ohm
};

struct SquidParams {
    double l1;    // H
    double l2;    // H
    double i_c1;  // A
    double i_c2;  // A

    double total_critical_current() const noexcept {
        return i_c1 + i_c2;
    }
};

struct ResonatorParams {
    double omega_r;  // rad/s
    double l_r;      // H
    double c_s;      // F
};

/// Phi0 / (2 pi I_c).
double jj_inductance(double i_c);

/// Josephson inductance of the total critical current scaled by
/// 1/|cos(pi Phi_ext / Phi0)|. Throws a divergence error within
/// kDivergenceGuard of a half-integer flux quantum.
double squid_inductance(const SquidParams &squid, double phi_ext);

/// omega_r [1 + (L_SQUID(Phi_ext) + L1/2) / L_r], rad/s.
double resonance_frequency(const ResonatorParams &res, const SquidParams &squid, double l1, double phi_ext);

/// L_r that puts the zero-flux resonance at target_omega0.
double calibrate_resonator(double target_omega0, double omega_r, const SquidParams &squid, double l1);

/// Twice the resonance frequency (any consistent unit).
double pump_frequency(double omega0);

struct FluxSample {
    double i_dc;      // A
    double flux;      // Wb
    double l_squid;   // H, 0 when diverged
    double omega0;    // rad/s, 0 when diverged
    bool diverged;
};

struct CurrentRange {
    double start;
    double stop;
    std::size_t points;

    std::vector<double> values() const;
};

/// Resonance frequency against bias current. Samples within the divergence
/// guard are kept in order but flagged.
std::vector<FluxSample> flux_sweep(const ResonatorParams &res, const SquidParams &squid, double l1,
                                   double current_to_flux, const CurrentRange &currents);

struct IvSample {
    double current;  // A
    double voltage;  // V
};

/// Default artificial timestep that scales the Brownian current steps.
inline constexpr double kDefaultBrownianTimestep = 1e-12;

/// RSJ backbone V = R sign(I) sqrt(I^2 - I_c^2) above the critical current,
/// 0 below. For temperature > 0 a random-walk current with step standard
/// deviation sqrt(4 k_B T / R) sqrt(dt_eff) is added to each bias point
/// before the backbone is evaluated.
double rsj_voltage(const JunctionParams &junction, double current);
std::vector<IvSample> rsj_iv_curve(const JunctionParams &junction, double temperature, const CurrentRange &currents,
                                   std::uint64_t seed, double dt_eff = kDefaultBrownianTimestep);

/// Resolved contents of a circuit configuration file.
struct CircuitConfig {
    SquidParams squid;
    ResonatorParams resonator;
    std::optional<double> target_omega0;
    double current_to_flux;
    CurrentRange sweep;
    JunctionParams junction;
    CurrentRange iv;
    double brownian_dt;
};

/// Values of the reference JPO cell: 7.5 pH loop inductances, 2 x 80 uA
/// junctions with 15 Ohm shunts, 4.5 pF shunt capacitance, calibrated to a
/// 7.5 GHz resonance.
CircuitConfig default_circuit_config();

/// Fields absent from `doc` keep their defaults. When resonator.l_r is not
/// given it is calibrated from resonator.target_f0_hz.
CircuitConfig circuit_config_from_json(const io::Json &doc);
io::Json circuit_config_to_json(const CircuitConfig &config);

}  // namespace jpoim::circuit

#endif  // JPOIM_CIRCUIT_PARAMS_H
