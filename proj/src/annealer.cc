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

#include "jpoim/annealer.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>

#include "jpoim/circuit_params.h"
#include "jpoim/errors.h"
#include "jpoim/parallel.h"

namespace jpoim::anneal {

namespace {

constexpr double kPi = circuit::kPi;

int sign_of(double c) {
    return c < 0.0 ? -1 : 1;
}

}  // namespace

double coupling_from_phase(double j_max, double delta_theta) {
    return j_max * std::cos(delta_theta);
}

double johnson_noise_amplitude(double r, double t) {
    if (!(r > 0.0)) {
        throw InvalidArgument("resistance must be positive");
    }
    if (!(t >= 0.0)) {
        throw InvalidArgument("temperature must be non-negative");
    }
    return std::sqrt(4.0 * r * t * circuit::kBoltzmann);
}

tile::TileParams effective_tile_couplings(const CouplingProgram &program) {
    tile::TileParams p;
    for (std::size_t i = 0; i < 4; ++i) {
        p.j[i] = coupling_from_phase(program.j_max, program.logical_phase[i] - program.coupler_offset_phase);
    }
    const double ancilla_max = program.ancilla_scale * program.j_max;
    p.j_a1 = coupling_from_phase(ancilla_max, program.ancilla_phase[0] - program.coupler_offset_phase);
    p.j_a2 = coupling_from_phase(ancilla_max, program.ancilla_phase[1] - program.coupler_offset_phase);
    p.c_cnst = program.c_cnst;
    return p;
}

void AnnealSchedule::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw InvalidArgument("schedule dt must be positive");
    }
    if (!(duration > 0.0) || !std::isfinite(duration)) {
        throw InvalidArgument("schedule duration must be positive");
    }
    const double ratio = duration / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio || std::round(ratio) < 10.0) {
        throw InvalidArgument("schedule duration/dt must be an integer of at least 10");
    }
    if (!(p_start < 1.0 && p_end > 1.0)) {
        throw InvalidArgument("pump ramp must start below threshold (p_start < 1) and end above it (p_end > 1)");
    }
}

std::size_t AnnealSchedule::steps() const {
    return static_cast<std::size_t>(std::llround(duration / dt));
}

double AnnealSchedule::pump(double t) const {
    const double f = std::clamp(t / duration, 0.0, 1.0);
    return p_start + (p_end - p_start) * f;
}

double DynamicsParams::threshold(const AnnealSchedule &s) const {
    return c_thresh.value_or(0.5 * std::sqrt(s.p_end - 1.0));
}

double DynamicsParams::saturation(const AnnealSchedule &s) const {
    return c_sat.value_or(1.5 * std::sqrt(s.p_end - 1.0));
}

double continuous_energy(const tile::TileParams &params, const OscillatorState &state) {
    const auto &c = state.tile;
    const double product = c[0] * c[1] * c[2] * c[3];
    double e = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        e += params.j[i] * state.reference * c[i];
    }
    return e - (params.j_a1 * c[4] + params.j_a2 * c[5] + params.c_cnst) * product;
}

std::array<double, 7> energy_gradient(const tile::TileParams &params, const OscillatorState &state) {
    const auto &c = state.tile;
    const double coupler = params.j_a1 * c[4] + params.j_a2 * c[5] + params.c_cnst;
    std::array<double, 7> g{};
    g[0] = params.j[0] * state.reference - coupler * c[1] * c[2] * c[3];
    g[1] = params.j[1] * state.reference - coupler * c[0] * c[2] * c[3];
    g[2] = params.j[2] * state.reference - coupler * c[0] * c[1] * c[3];
    g[3] = params.j[3] * state.reference - coupler * c[0] * c[1] * c[2];
    const double product = c[0] * c[1] * c[2] * c[3];
    g[4] = -params.j_a1 * product;
    g[5] = -params.j_a2 * product;
    g[6] = params.j[0] * c[0] + params.j[1] * c[1] + params.j[2] * c[2] + params.j[3] * c[3];
    return g;
}

tile::TileConfig TrialResult::referenced_config() const {
    SpinConfig logical = raw_config.logical();
    if (reference_sign < 0) {
        logical = logical.flipped();
    }
    return tile::TileConfig(std::move(logical), raw_config.ancilla());
}

namespace {

void validate_dynamics(const DynamicsParams &d, const AnnealSchedule &s) {
    if (!(d.beta >= 0.0) || !(d.eta >= 0.0) || !(d.initial_spread >= 0.0)) {
        throw InvalidArgument("beta, eta and initial_spread must be non-negative");
    }
    if (!(d.threshold(s) > 0.0) || !(d.saturation(s) > d.threshold(s))) {
        throw InvalidArgument("need 0 < c_thresh < c_sat");
    }
}

tile::TileConfig read_signs(const OscillatorState &s) {
    SpinConfig logical{sign_of(s.tile[0]), sign_of(s.tile[1]), sign_of(s.tile[2]), sign_of(s.tile[3])};
    SpinConfig ancilla{sign_of(s.tile[4]), sign_of(s.tile[5])};
    return tile::TileConfig(std::move(logical), std::move(ancilla));
}

}  // namespace

TrialResult simulate_trial(const CouplingProgram &program, const AnnealSchedule &schedule,
                           const DynamicsParams &dynamics, std::uint64_t seed, const TrialOptions &options) {
    schedule.validate();
    validate_dynamics(dynamics, schedule);
    const tile::TileParams params = effective_tile_couplings(program);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Index 0..5 tile oscillators, 6 the reference.
    std::array<double, 7> c{};
    if (options.initial) {
        std::copy(options.initial->tile.begin(), options.initial->tile.end(), c.begin());
        c[6] = options.initial->reference;
    } else {
        for (auto &x : c) {
            x = dynamics.initial_spread * gauss(rng);
        }
    }

    const std::size_t steps = schedule.steps();
    const double dt = schedule.dt;
    const double noise_scale = dynamics.eta * std::sqrt(dt);
    const double c_sat = dynamics.saturation(schedule);

    auto as_state = [](const std::array<double, 7> &v) {
        OscillatorState s;
        std::copy(v.begin(), v.begin() + 6, s.tile.begin());
        s.reference = v[6];
        return s;
    };

    TrialResult result{{}, false, tile::TileConfig::from_index(63), 1, {}};
    if (options.trajectory_stride > 0) {
        result.trajectory.reserve(steps / options.trajectory_stride + 2);
        result.trajectory.push_back({0.0, schedule.pump(0.0), as_state(c)});
    }

    for (std::size_t k = 0; k < steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double gain = schedule.pump(t) - 1.0;
        const auto grad = energy_gradient(params, as_state(c));
        for (std::size_t i = 0; i < c.size(); ++i) {
            double drift = (gain - c[i] * c[i]) * c[i] - dynamics.beta * grad[i];
            double next = c[i] + drift * dt;
            if (noise_scale > 0.0) {
                next += noise_scale * gauss(rng);
            }
            if (!std::isfinite(next)) {
                throw IntegrationBlowup(t + dt, dt);
            }
            c[i] = std::clamp(next, -c_sat, c_sat);
        }
        if (options.trajectory_stride > 0 && (k + 1) % options.trajectory_stride == 0) {
            const double t_next = static_cast<double>(k + 1) * dt;
            result.trajectory.push_back({t_next, schedule.pump(t_next), as_state(c)});
        }
    }

    result.final_state = as_state(c);
    const double thresh = dynamics.threshold(schedule);
    result.settled = std::all_of(c.begin(), c.end(), [&](double x) { return std::abs(x) > thresh; });
    result.raw_config = read_signs(result.final_state);
    result.reference_sign = sign_of(c[6]);
    return result;
}

double StateHistogram::probability(std::size_t state) const {
    const auto n = settled();
    return n == 0 ? 0.0 : static_cast<double>(counts.at(state)) / static_cast<double>(n);
}

std::vector<TrialResult> run_trial_results(const CouplingProgram &program, const AnnealSchedule &schedule,
                                           const DynamicsParams &dynamics, std::size_t trials,
                                           std::uint64_t master_seed, unsigned workers) {
    if (trials == 0) {
        throw InvalidArgument("trial count must be at least 1");
    }
    schedule.validate();
    validate_dynamics(dynamics, schedule);
    std::vector<std::optional<TrialResult>> slots(trials);
    parallel_for(trials, workers, [&](std::size_t k) {
        slots[k] = simulate_trial(program, schedule, dynamics, split_seed(master_seed, k));
    });
    std::vector<TrialResult> out;
    out.reserve(trials);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

StateHistogram run_trials(const CouplingProgram &program, const AnnealSchedule &schedule,
                          const DynamicsParams &dynamics, std::size_t trials, std::uint64_t master_seed,
                          unsigned workers) {
    StateHistogram hist;
    hist.trials = trials;
    hist.seed = master_seed;
    for (const auto &r : run_trial_results(program, schedule, dynamics, trials, master_seed, workers)) {
        if (!r.settled) {
            ++hist.unsettled;
            continue;
        }
        ++hist.counts[r.raw_config.logical().index()];
    }
    return hist;
}

double dft_phase(std::span<const double> samples, double dt, double f0) {
    if (!(dt > 0.0) || !(f0 > 0.0)) {
        throw InvalidArgument("dt and f0 must be positive");
    }
    const double periods = static_cast<double>(samples.size()) * dt * f0;
    if (periods < 4.0) {
        throw Error(ErrorKind::kInsufficientData, "window holds " + std::to_string(periods) +
                                                      " periods of f0; at least 4 are needed");
    }
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double arg = -2.0 * kPi * f0 * dt * static_cast<double>(k);
        acc += samples[k] * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return std::arg(acc);
}

int classify_state(double phase) {
    if (!std::isfinite(phase)) {
        throw InvalidArgument("phase must be finite");
    }
    const double wrapped = std::remainder(phase, 2.0 * kPi);  // in [-pi, pi]
    const double to_zero = std::abs(wrapped);
    const double to_pi = kPi - to_zero;
    if (std::abs(to_zero - to_pi) <= 1e-12) {
        throw Error(ErrorKind::kAmbiguousPhase, "phase " + std::to_string(phase) + " is equidistant from 0 and pi");
    }
    return to_pi < to_zero ? 1 : 0;
}

namespace {

template <std::size_t N>
std::array<double, N> fixed_array(const io::Json &doc, const char *key, std::string_view where) {
    auto v = io::number_array(doc, key, where);
    if (v.size() != N) {
        throw ParseError("field '" + std::string(where) + (where.empty() ? "" : ".") + key + "': expected " +
                         std::to_string(N) + " entries, got " + std::to_string(v.size()));
    }
    std::array<double, N> out{};
    std::copy(v.begin(), v.end(), out.begin());
    return out;
}

}  // namespace

AnnealRun anneal_run_from_json(const io::Json &doc) {
    if (!doc.is_object()) {
        throw ParseError("program file must be an object");
    }
    AnnealRun run;
    const io::Json &phases = doc.contains("pump_phase") ? doc.at("pump_phase") : io::Json();
    if (!phases.is_object()) {
        throw ParseError("field 'pump_phase': expected an object with 'logical' and 'ancilla' arrays");
    }
    run.program.logical_phase = fixed_array<4>(phases, "logical", "pump_phase");
    run.program.ancilla_phase = fixed_array<2>(phases, "ancilla", "pump_phase");
    run.program.coupler_offset_phase = io::optional_number(doc, "coupler_offset_phase", "").value_or(0.0);
    run.program.j_max = io::number_field(doc, "j_max", "");
    run.program.ancilla_scale = io::optional_number(doc, "ancilla_scale", "").value_or(2.0);
    run.program.c_cnst = io::number_field(doc, "c_cnst", "");

    if (doc.contains("schedule")) {
        const io::Json &s = doc.at("schedule");
        run.schedule.duration = io::optional_number(s, "duration", "schedule").value_or(run.schedule.duration);
        run.schedule.dt = io::optional_number(s, "dt", "schedule").value_or(run.schedule.dt);
        run.schedule.p_start = io::optional_number(s, "p_start", "schedule").value_or(run.schedule.p_start);
        run.schedule.p_end = io::optional_number(s, "p_end", "schedule").value_or(run.schedule.p_end);
    }
    if (doc.contains("dynamics")) {
        const io::Json &d = doc.at("dynamics");
        run.dynamics.beta = io::optional_number(d, "beta", "dynamics").value_or(run.dynamics.beta);
        run.dynamics.initial_spread =
            io::optional_number(d, "initial_spread", "dynamics").value_or(run.dynamics.initial_spread);
        run.dynamics.c_thresh = io::optional_number(d, "c_thresh", "dynamics");
        run.dynamics.c_sat = io::optional_number(d, "c_sat", "dynamics");
    }
    if (doc.contains("noise")) {
        run.dynamics.eta = io::optional_number(doc.at("noise"), "eta", "noise").value_or(run.dynamics.eta);
    }
    run.linewidth_hz = io::optional_number(doc, "linewidth_hz", "").value_or(run.linewidth_hz);
    run.schedule.validate();
    validate_dynamics(run.dynamics, run.schedule);
    return run;
}

io::Json anneal_run_to_json(const AnnealRun &run) {
    io::Json out;
    out["pump_phase"] = {{"logical", run.program.logical_phase}, {"ancilla", run.program.ancilla_phase}};
    out["coupler_offset_phase"] = run.program.coupler_offset_phase;
    out["j_max"] = run.program.j_max;
    out["ancilla_scale"] = run.program.ancilla_scale;
    out["c_cnst"] = run.program.c_cnst;
    out["schedule"] = {{"duration", run.schedule.duration},
                       {"dt", run.schedule.dt},
                       {"p_start", run.schedule.p_start},
                       {"p_end", run.schedule.p_end},
                       {"ramp", "linear"}};
    out["dynamics"] = {{"beta", run.dynamics.beta},
                       {"initial_spread", run.dynamics.initial_spread},
                       {"c_thresh", run.dynamics.threshold(run.schedule)},
                       {"c_sat", run.dynamics.saturation(run.schedule)}};
    out["noise"] = {{"eta", run.dynamics.eta}};
    out["linewidth_hz"] = run.linewidth_hz;
    return out;
}

AnnealRun even_parity_benchmark() {
    AnnealRun run;
    const double h = kPi / 2.0;
    run.program.logical_phase = {h, h, h, h};
    run.program.ancilla_phase = {h, h};
    run.program.j_max = 2.0;
    run.program.c_cnst = 7.5;
    return run;
}

AnnealRun alternating_benchmark() {
    AnnealRun run = even_parity_benchmark();
    run.program.logical_phase = {0.0, kPi, 0.0, kPi};
    return run;
}

}  // namespace jpoim::anneal
