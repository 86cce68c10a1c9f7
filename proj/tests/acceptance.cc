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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "jpoim/annealer.h"
#include "jpoim/circuit_params.h"
#include "jpoim/errors.h"
#include "jpoim/lhz_map.h"
#include "jpoim/quantum_tile.h"
#include "jpoim/spin_core.h"
#include "jpoim/tile_model.h"

namespace {

using namespace jpoim;

constexpr double kPi = 3.14159265358979323846;

struct Verdict {
    bool pass;
    std::string detail;
};

bool even(std::size_t logical_index) {
    return std::popcount(logical_index) % 2 == 0;
}

std::set<std::size_t> even_states() {
    std::set<std::size_t> out;
    for (std::size_t s = 0; s < 16; ++s) {
        if (even(s)) {
            out.insert(s);
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Verdict tile_energy_oracle() {
    const tile::TileParams p = tile::TileParams::uniform(1.0, 2.0, 1.0);
    const std::vector<tile::TileConfig> rows = {tile::TileConfig({1, 1, 1, 1}, {1, 1}),
                                                tile::TileConfig({1, 1, -1, -1}, {1, -1}),
                                                tile::TileConfig({-1, -1, -1, -1}, {-1, -1})};
    std::string detail = "energies";
    bool ok = true;
    for (const auto &c : rows) {
        const double e = tile::tile_energy(p, c);
        ok = ok && e == -1.0;
        detail += " " + fmt(e);
    }
    return {ok, detail + " (expected -1 exactly)"};
}

Verdict parity_enforcement() {
    const tile::TileGroundSet g = tile::ground_set(tile::TileParams::uniform(0.0, 1.0, 1.0));
    std::set<std::size_t> logical;
    bool ancillas_up = true;
    for (const auto &c : g.configs) {
        logical.insert(c.logical().index());
        ancillas_up = ancillas_up && c.ancilla() == SpinConfig{1, 1};
    }
    const bool ok = g.configs.size() == 8 && logical == even_states() && ancillas_up;
    return {ok, std::to_string(g.configs.size()) + " ground configs, all even parity with ancillas (+1,+1): " +
                    (ok ? "yes" : "no")};
}

double closed_form_minimum(const quantum::QuantumTileParams &p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < 16; ++s) {
        double e = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            e += p.j[i] * (((s >> (3 - i)) & 1U) ? 1.0 : -1.0);
        }
        e -= (even(s) ? 1.0 : -1.0) * p.j_c;
        best = std::min(best, e);
    }
    return best - 2.0 * p.j_a;
}

Verdict quantum_classical_equivalence() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> field(-2.0, 2.0);
    std::uniform_real_distribution<double> positive(0.0, 2.0);
    double worst = 0.0;
    const int draws = 200;
    for (int k = 0; k < draws; ++k) {
        const quantum::QuantumTileParams p{{field(rng), field(rng), field(rng), field(rng)}, positive(rng),
                                           field(rng)};
        const double e = quantum::ground_states(quantum::build_hamiltonian(p)).e_min;
        worst = std::max(worst, std::abs(e - closed_form_minimum(p)));
    }
    return {worst <= 1e-9, std::to_string(draws) + " draws, max |e_min - closed form| = " + fmt(worst)};
}

Verdict quantum_parity_histogram() {
    const double j_a = 1.0;
    const double j_c = 1.0;
    const auto sweep = quantum::default_sweep(j_c);
    const std::size_t trials = 1000;
    const auto clean = quantum::sweep_distribution(j_a, j_c, sweep, {}, trials, 0).support();
    const double gap = quantum::sweep_gap(j_a, j_c, sweep);
    const quantum::NoiseSpec noise{0.1 * gap, quantum::NoiseDistribution::kUniform, 5};
    const auto noisy = quantum::sweep_distribution(j_a, j_c, sweep, noise, trials, 0).support();
    const std::set<std::size_t> expected = even_states();
    const bool ok = std::set<std::size_t>(clean.begin(), clean.end()) == expected &&
                    std::set<std::size_t>(noisy.begin(), noisy.end()) == expected;
    return {ok, "support " + std::to_string(clean.size()) + " states noise-free, " + std::to_string(noisy.size()) +
                    " states with noise " + fmt(noise.thermal_coefficient) + " (gap " + fmt(gap) + "), " +
                    std::to_string(trials) + " trials"};
}

Verdict even_parity_anneal() {
    const anneal::AnnealRun run = anneal::even_parity_benchmark();
    const anneal::StateHistogram h = anneal::run_trials(run.program, run.schedule, run.dynamics, 1000, 8, 0);
    bool ok = h.unsettled == 0;
    double lo = 1.0;
    double hi = 0.0;
    std::uint64_t odd = 0;
    for (std::size_t s = 0; s < 16; ++s) {
        if (!even(s)) {
            odd += h.counts[s];
            continue;
        }
        const double p = h.probability(s);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
        ok = ok && std::abs(p - 0.125) <= 0.035;
    }
    ok = ok && odd == 0;
    return {ok, "unsettled " + std::to_string(h.unsettled) + ", odd-parity outcomes " + std::to_string(odd) +
                    ", even-state probabilities in [" + fmt(lo) + ", " + fmt(hi) + "]"};
}

Verdict alternating_anneal() {
    const anneal::AnnealRun run = anneal::alternating_benchmark();
    const anneal::StateHistogram h = anneal::run_trials(run.program, run.schedule, run.dynamics, 1000, 9, 0);
    std::set<std::size_t> support;
    for (std::size_t s = 0; s < 16; ++s) {
        if (h.counts[s] > 0) {
            support.insert(s);
        }
    }
    const double p0101 = h.probability(0b0101);
    const double p1010 = h.probability(0b1010);
    const bool ok = h.unsettled == 0 && support == std::set<std::size_t>{0b0101, 0b1010} &&
                    std::abs(p0101 - 0.5) <= 0.05 && std::abs(p1010 - 0.5) <= 0.05;
    return {ok, "support size " + std::to_string(support.size()) + ", P(0101) = " + fmt(p0101) +
                    ", P(1010) = " + fmt(p1010)};
}

Verdict resonance_calibration() {
    const circuit::SquidParams squid{7.5e-12, 7.5e-12, 80e-6, 80e-6};
    const double omega_r = 2.0 * kPi * 7.0e9;
    const double target = 2.0 * kPi * 7.5e9;
    const double l_r = circuit::calibrate_resonator(target, omega_r, squid, squid.l1);
    const double omega0 = circuit::resonance_frequency({omega_r, l_r, 4.5e-12}, squid, squid.l1, 0.0);
    const double rel = std::abs(omega0 - target) / target;
    const double pump = circuit::pump_frequency(target);
    const bool ok = rel <= 1e-9 && pump == 2.0 * kPi * 15e9;
    return {ok, "f0 = " + fmt(omega0 / (2.0 * kPi)) + " Hz (rel err " + fmt(rel) + "), pump = " +
                    fmt(pump / (2.0 * kPi)) + " Hz"};
}

Verdict squid_divergence() {
    const circuit::SquidParams squid{7.5e-12, 7.5e-12, 80e-6, 80e-6};
    bool diverged = false;
    try {
        circuit::squid_inductance(squid, circuit::kFluxQuantum / 2.0);
    } catch (const Error &e) {
        diverged = e.kind() == ErrorKind::kDivergence;
    }
    const double ratio =
        circuit::squid_inductance(squid, circuit::kFluxQuantum / 3.0) / circuit::squid_inductance(squid, 0.0);
    const double rel = std::abs(ratio - 2.0) / 2.0;
    return {diverged && rel <= 1e-12,
            std::string("divergence error at half flux quantum: ") + (diverged ? "yes" : "no") +
                ", L(phi0/3)/L(0) rel err " + fmt(rel)};
}

Verdict lhz_round_trip() {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> grid(-16, 16);
    std::size_t checked = 0;
    bool ok = true;
    for (std::size_t n = 3; n <= 5; ++n) {
        const lhz::LhzLayout layout = lhz::build_layout(n);
        std::vector<double> j(n * n, 0.0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                j[a * n + b] = j[b * n + a] = grid(rng) / 8.0;
            }
        }
        const IsingProblem logical(std::vector<double>(n, 0.0), j);
        const double c = 3.0;
        const lhz::LhzProblem problem(lhz::map_couplings(logical), c);
        const double constant = -c * static_cast<double>(layout.tiles().size());
        for (std::uint64_t idx = 0; idx < (1u << n); ++idx) {
            const SpinConfig s = SpinConfig::from_index(idx, n);
            const SpinConfig phys = lhz::encode_logical(s, layout);
            const SpinConfig canonical = s[0] > 0 ? s : s.flipped();
            ok = ok && !lhz::first_violated_tile(layout, phys).has_value();
            ok = ok && lhz::decode_readout(phys, layout) == canonical;
            ok = ok && lhz::lhz_energy(problem, layout, phys) - constant == ising_energy(logical, s);
            ++checked;
        }
    }
    return {ok, std::to_string(checked) + " logical configs (N = 3, 4, 5) encoded, decoded and energy-matched"};
}

Verdict johnson_noise() {
    const double value = anneal::johnson_noise_amplitude(15.0, 4.2);
    const double independent = std::sqrt(4.0 * 15.0 * 4.2 * 1.380649e-23);
    const double rel_target = std::abs(value - 5.90e-11) / 5.90e-11;
    const double rel_indep = std::abs(value - independent) / independent;
    return {rel_target <= 0.005 && rel_indep <= 1e-12,
            "amplitude " + fmt(value) + " A/sqrt(Hz), rel err vs 5.90e-11 " + fmt(rel_target)};
}

Verdict dft_readout() {
    const double f0 = 7.5e9;
    const double dt = 1.0 / (f0 * 40.0);
    const std::size_t samples = 40 * 10;
    double worst = 0.0;
    bool classes_ok = true;
    for (double phi : {0.0, kPi / 3.0, kPi}) {
        std::vector<double> x(samples);
        for (std::size_t k = 0; k < samples; ++k) {
            x[k] = std::cos(2.0 * kPi * f0 * dt * static_cast<double>(k) + phi);
        }
        const double got = anneal::dft_phase(x, dt, f0);
        worst = std::max(worst, std::abs(std::remainder(got - phi, 2.0 * kPi)));
        if (phi == 0.0) {
            classes_ok = classes_ok && anneal::classify_state(got) == 0;
        }
        if (phi == kPi) {
            classes_ok = classes_ok && anneal::classify_state(got) == 1;
        }
    }
    return {worst <= 1e-6 && classes_ok,
            "max phase error " + fmt(worst) + " rad, 0 -> bit 0 and pi -> bit 1: " + (classes_ok ? "yes" : "no")};
}

std::string run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    if (code != cli::kExitOk) {
        throw std::runtime_error("command failed: " + err.str());
    }
    return out.str();
}

Verdict reproducibility() {
    const std::string dir = std::string(JPOIM_SOURCE_DIR) + "/configs/";
    const std::vector<std::vector<std::string>> commands = {
        {"anneal", "--program", dir + "even_parity.json", "--trials", "300", "--seed", "77", "--quiet"},
        {"tile", "quantum", "--params", dir + "quantum_sweep.json", "--noise", "0.05", "--trials", "340", "--seed",
         "77", "--quiet"},
        {"circuit", "iv", "--config", dir + "circuit.json", "--temp", "4.2", "--seed", "77", "--quiet"},
        {"lhz", "map", "--n", "3", "--problem", dir + "triangle_problem.json", "--format", "json", "--quiet"},
    };
    std::size_t identical = 0;
    for (const auto &cmd : commands) {
        const std::string reference = run_cli(cmd);
        bool same = true;
        for (const char *workers : {"1", "3", "8"}) {
            auto with_workers = cmd;
            with_workers.insert(with_workers.end(), {"--workers", workers});
            same = same && run_cli(with_workers) == reference && run_cli(with_workers) == reference;
        }
        identical += same ? 1 : 0;
    }
    return {identical == commands.size(), std::to_string(identical) + "/" + std::to_string(commands.size()) +
                                              " commands byte-identical across repeats and worker counts 1, 3, 8"};
}

struct Criterion {
    int id;
    const char *name;
    std::function<Verdict()> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "tile energy oracle", tile_energy_oracle},
        {2, "parity enforcement", parity_enforcement},
        {3, "quantum/classical ground energy", quantum_classical_equivalence},
        {4, "quantum tile parity histogram", quantum_parity_histogram},
        {5, "even-parity anneal", even_parity_anneal},
        {6, "alternating-phase anneal", alternating_anneal},
        {7, "resonance calibration", resonance_calibration},
        {8, "SQUID divergence and periodicity", squid_divergence},
        {9, "LHZ round trip", lhz_round_trip},
        {10, "Johnson noise amplitude", johnson_noise},
        {11, "DFT phase readout", dft_readout},
        {12, "reproducibility", reproducibility},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v{false, ""};
        try {
            v = c.check();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        failures += v.pass ? 0 : 1;
        std::printf("%s %2d %s: %s [%.1f ms]\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), ms);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
