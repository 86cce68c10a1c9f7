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

#ifndef JPOIM_ANNEALER_H
#define JPOIM_ANNEALER_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jpoim/problem_io.h"
#include "jpoim/tile_model.h"

namespace jpoim::anneal {

/// Signed coupling j_max cos(delta_theta) produced by a pump phase offset.
double coupling_from_phase(double j_max, double delta_theta);

/// sqrt(4 R T k_B), evaluated as written (see README for units).
double johnson_noise_amplitude(double r, double t);

/// Pump phases of the six tile oscillators relative to the coupler.
struct CouplingProgram {
    std::array<double, 4> logical_phase{};
    std::array<double, 2> ancilla_phase{};
    double coupler_offset_phase = 0.0;
    /// Logical coupling magnitude.
    double j_max = 1.0;
    /// Ancilla magnitude relative to j_max.
    double ancilla_scale = 2.0;
    double c_cnst = 0.0;
};

/// J_i from the logical phases, J_a1/J_a2 from the ancilla phases with
/// magnitude ancilla_scale * j_max, C_cnst copied from the program.
tile::TileParams effective_tile_couplings(const CouplingProgram &program);

/// Linear pump ramp from p_start (< 1) to p_end (> 1) over `duration`
/// (units of the oscillator relaxation time).
struct AnnealSchedule {
    double duration = 50.0;
    double dt = 1e-2;
    double p_start = 0.5;
    double p_end = 2.0;

    void validate() const;
    std::size_t steps() const;
    double pump(double t) const;
};

struct DynamicsParams {
    /// Weight of the energy gradient relative to the oscillator nonlinearity.
    double beta = 0.2;
    /// Noise amplitude; the per-step standard deviation is eta * sqrt(dt).
    double eta = 0.05;
    /// Standard deviation of the initial amplitudes.
    double initial_spread = 0.01;
    /// Readout threshold; defaults to 0.5 sqrt(p_end - 1).
    std::optional<double> c_thresh;
    /// Amplitude clip; defaults to 1.5 sqrt(p_end - 1).
    std::optional<double> c_sat;

    double threshold(const AnnealSchedule &s) const;
    double saturation(const AnnealSchedule &s) const;
};

/// Amplitudes of the six tile oscillators (s1..s4, a1, a2) and of the
/// coupler's reference oscillator, which carries the field terms.
struct OscillatorState {
    std::array<double, 6> tile{};
    double reference = 0.0;
};

/// Continuous tile energy with every spin replaced by its amplitude and the
/// field terms taken relative to the reference oscillator:
/// sum_i J_i c_ref c_i - (J_a1 c5 + J_a2 c6 + C) c1 c2 c3 c4.
double continuous_energy(const tile::TileParams &params, const OscillatorState &state);

/// Gradient of continuous_energy; index 6 is the reference oscillator.
std::array<double, 7> energy_gradient(const tile::TileParams &params, const OscillatorState &state);

struct TrajectoryPoint {
    double t;
    double pump;
    OscillatorState state;
};

struct TrialOptions {
    /// Replaces the random initial amplitudes.
    std::optional<OscillatorState> initial;
    /// Record every n-th step (0 disables recording).
    std::size_t trajectory_stride = 0;
};

struct TrialResult {
    OscillatorState final_state;
    bool settled;
    /// Spin signs as read out, before folding the reference phase.
    tile::TileConfig raw_config;
    int reference_sign;
    std::vector<TrajectoryPoint> trajectory;

    /// Raw configuration with the logical spins multiplied by the reference
    /// sign, i.e. expressed in the frame where the fields were programmed.
    tile::TileConfig referenced_config() const;
};

/// Euler-Maruyama integration of
///   dc = [(p(t) - 1 - c^2) c - beta dE/dc] dt + eta dW
/// for the six tile oscillators plus the reference, with amplitudes clipped
/// to [-c_sat, c_sat]. Throws IntegrationBlowup on a non-finite amplitude.
TrialResult simulate_trial(const CouplingProgram &program, const AnnealSchedule &schedule,
                           const DynamicsParams &dynamics, std::uint64_t seed, const TrialOptions &options = {});

/// Counts over 4-bit logical states (spin 1 most significant, bit 1 = +1).
/// Settled trials are counted per state; unsettled ones separately, so the
/// counts sum to trials - unsettled.
struct StateHistogram {
    std::array<std::uint64_t, 16> counts{};
    std::uint64_t trials = 0;
    std::uint64_t unsettled = 0;
    std::uint64_t seed = 0;

    std::uint64_t settled() const noexcept {
        return trials - unsettled;
    }
    double probability(std::size_t state) const;
};

/// Independent trials; trial k uses the stream split_seed(master_seed, k).
/// The histogram is the same for every worker count.
StateHistogram run_trials(const CouplingProgram &program, const AnnealSchedule &schedule,
                          const DynamicsParams &dynamics, std::size_t trials, std::uint64_t master_seed,
                          unsigned workers = 1);

/// Same trials, returning each result (without trajectories).
std::vector<TrialResult> run_trial_results(const CouplingProgram &program, const AnnealSchedule &schedule,
                                           const DynamicsParams &dynamics, std::size_t trials,
                                           std::uint64_t master_seed, unsigned workers = 1);

/// Argument of sum_k x_k exp(-i 2 pi f0 t_k), t_k = k dt. Needs at least four
/// periods of f0 in the window.
double dft_phase(std::span<const double> samples, double dt, double f0);

/// 1 when the phase is nearer pi than 0 (mod 2 pi), else 0. Phases within
/// 1e-12 of +-pi/2 are rejected as ambiguous.
int classify_state(double phase);

/// Full description of an anneal run as read from a program file.
struct AnnealRun {
    CouplingProgram program;
    AnnealSchedule schedule;
    DynamicsParams dynamics;
    /// Resonator linewidth used only to report simulated time in seconds.
    double linewidth_hz = 2.5e9;
};

AnnealRun anneal_run_from_json(const io::Json &doc);
io::Json anneal_run_to_json(const AnnealRun &run);

/// Reference programs: uniform four-body coupling with zero fields (every
/// even-parity state is a ground state), and alternating logical pump
/// phases (0, pi, 0, pi), which selects 0101 / 1010.
AnnealRun even_parity_benchmark();
AnnealRun alternating_benchmark();

}  // namespace jpoim::anneal

#endif  // JPOIM_ANNEALER_H
