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

#include <cmath>
#include <random>
#include <string>

#include "jpoim/errors.h"

namespace jpoim::circuit {

namespace {

void require_positive(double v, const char *what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be positive and finite");
    }
}

void validate(const SquidParams &s) {
    require_positive(s.l1, "SQUID loop inductance l1");
    require_positive(s.l2, "SQUID loop inductance l2");
    require_positive(s.i_c1, "SQUID critical current i_c1");
    require_positive(s.i_c2, "SQUID critical current i_c2");
}

}  // namespace

double jj_inductance(double i_c) {
    require_positive(i_c, "critical current");
    return kFluxQuantum / (2.0 * kPi * i_c);
}

double squid_inductance(const SquidParams &squid, double phi_ext) {
    validate(squid);
    if (!std::isfinite(phi_ext)) {
        throw InvalidArgument("external flux must be finite");
    }
    const double frac = phi_ext / kFluxQuantum;
    const double to_half = std::abs(frac - (std::floor(frac) + 0.5));
    if (to_half < kDivergenceGuard) {
        throw Error(ErrorKind::kDivergence, "SQUID inductance diverges at half a flux quantum (Phi_ext=" +
                                                std::to_string(phi_ext) + " Wb)");
    }
    return jj_inductance(squid.total_critical_current()) / std::abs(std::cos(kPi * frac));
}

double resonance_frequency(const ResonatorParams &res, const SquidParams &squid, double l1, double phi_ext) {
    require_positive(res.omega_r, "bare resonance frequency");
    require_positive(res.l_r, "resonator inductance");
    const double l_squid = squid_inductance(squid, phi_ext);
    return res.omega_r * (1.0 + (l_squid + l1 / 2.0) / res.l_r);
}

double calibrate_resonator(double target_omega0, double omega_r, const SquidParams &squid, double l1) {
    require_positive(omega_r, "bare resonance frequency");
    if (!(target_omega0 > omega_r)) {
        throw Error(ErrorKind::kInfeasibleCalibration,
                    "target resonance must exceed the bare resonator frequency; the loaded inductance only "
                    "raises it");
    }
    return omega_r * (squid_inductance(squid, 0.0) + l1 / 2.0) / (target_omega0 - omega_r);
}

double pump_frequency(double omega0) {
    require_positive(omega0, "resonance frequency");
    return 2.0 * omega0;
}

std::vector<double> CurrentRange::values() const {
    if (points == 0) {
        throw InvalidArgument("current range needs at least one point");
    }
    if (!std::isfinite(start) || !std::isfinite(stop)) {
        throw InvalidArgument("current range bounds must be finite");
    }
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / static_cast<double>(points - 1);
    for (std::size_t k = 0; k < points; ++k) {
        out[k] = start + step * static_cast<double>(k);
    }
    out.back() = stop;
    return out;
}

std::vector<FluxSample> flux_sweep(const ResonatorParams &res, const SquidParams &squid, double l1,
                                   double current_to_flux, const CurrentRange &currents) {
    if (!std::isfinite(current_to_flux)) {
        throw InvalidArgument("current-to-flux factor must be finite");
    }
    std::vector<FluxSample> out;
    for (double i : currents.values()) {
        FluxSample s{i, i * current_to_flux, 0.0, 0.0, false};
        try {
            s.l_squid = squid_inductance(squid, s.flux);
            s.omega0 = resonance_frequency(res, squid, l1, s.flux);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::kDivergence) {
                throw;
            }
            s.l_squid = 0.0;
            s.omega0 = 0.0;
            s.diverged = true;
        }
        out.push_back(s);
    }
    return out;
}

double rsj_voltage(const JunctionParams &junction, double current) {
    const double a = std::abs(current);
    if (a <= junction.i_c) {
        return 0.0;
    }
    const double v = junction.r_shunt * std::sqrt(a * a - junction.i_c * junction.i_c);
    return current < 0.0 ? -v : v;
}

std::vector<IvSample> rsj_iv_curve(const JunctionParams &junction, double temperature, const CurrentRange &currents,
                                   std::uint64_t seed, double dt_eff) {
    require_positive(junction.i_c, "junction critical current");
    require_positive(junction.r_shunt, "shunt resistance");
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw InvalidArgument("temperature must be non-negative");
    }
    require_positive(dt_eff, "Brownian timestep");

    const double step_std = std::sqrt(4.0 * kBoltzmann * temperature / junction.r_shunt) * std::sqrt(dt_eff);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> draw(0.0, 1.0);
    double walk = 0.0;
    std::vector<IvSample> out;
    for (double i : currents.values()) {
        if (temperature > 0.0) {
            walk += step_std * draw(rng);
        }
        out.push_back({i, rsj_voltage(junction, i + walk)});
    }
    return out;
}

CircuitConfig default_circuit_config() {
    CircuitConfig c;
    c.squid = {7.5e-12, 7.5e-12, 80e-6, 80e-6};
    const double target = 2.0 * kPi * 7.5e9;
    const double omega_r = 2.0 * kPi * 7.0e9;
    c.resonator = {omega_r, calibrate_resonator(target, omega_r, c.squid, c.squid.l1), 4.5e-12};
    c.target_omega0 = target;
    c.current_to_flux = kFluxQuantum / 1e-3;  // one flux quantum per mA of bias
    c.sweep = {-0.45e-3, 0.45e-3, 91};
    c.junction = {160e-6, 15.0};
    c.iv = {-480e-6, 480e-6, 201};
    c.brownian_dt = kDefaultBrownianTimestep;
    return c;
}

namespace {

CurrentRange range_from_json(const io::Json &doc, const char *where, CurrentRange fallback) {
    if (!doc.is_object() || !doc.contains(where)) {
        return fallback;
    }
    const io::Json &r = doc.at(where);
    CurrentRange out = fallback;
    if (auto v = io::optional_number(r, "i_start", where)) {
        out.start = *v;
    }
    if (auto v = io::optional_number(r, "i_stop", where)) {
        out.stop = *v;
    }
    if (auto v = io::optional_count(r, "points", where)) {
        out.points = static_cast<std::size_t>(*v);
    }
    return out;
}

}  // namespace

CircuitConfig circuit_config_from_json(const io::Json &doc) {
    CircuitConfig c = default_circuit_config();
    bool l_r_given = false;
    if (doc.contains("squid")) {
        const io::Json &s = doc.at("squid");
        c.squid.l1 = io::optional_number(s, "l1", "squid").value_or(c.squid.l1);
        c.squid.l2 = io::optional_number(s, "l2", "squid").value_or(c.squid.l2);
        c.squid.i_c1 = io::optional_number(s, "i_c1", "squid").value_or(c.squid.i_c1);
        c.squid.i_c2 = io::optional_number(s, "i_c2", "squid").value_or(c.squid.i_c2);
    }
    if (doc.contains("resonator")) {
        const io::Json &r = doc.at("resonator");
        if (auto f = io::optional_number(r, "f_r_hz", "resonator")) {
            c.resonator.omega_r = 2.0 * kPi * *f;
        }
        if (auto f = io::optional_number(r, "target_f0_hz", "resonator")) {
            c.target_omega0 = 2.0 * kPi * *f;
        }
        if (auto l = io::optional_number(r, "l_r", "resonator")) {
            c.resonator.l_r = *l;
            c.target_omega0.reset();
            l_r_given = true;
        }
        c.resonator.c_s = io::optional_number(r, "c_s", "resonator").value_or(c.resonator.c_s);
    }
    if (!l_r_given && c.target_omega0) {
        c.resonator.l_r = calibrate_resonator(*c.target_omega0, c.resonator.omega_r, c.squid, c.squid.l1);
    }
    if (doc.contains("sweep")) {
        c.current_to_flux =
            io::optional_number(doc.at("sweep"), "current_to_flux", "sweep").value_or(c.current_to_flux);
    }
    c.sweep = range_from_json(doc, "sweep", c.sweep);
    if (doc.contains("junction")) {
        const io::Json &j = doc.at("junction");
        c.junction.i_c = io::optional_number(j, "i_c", "junction").value_or(c.junction.i_c);
        c.junction.r_shunt = io::optional_number(j, "r_shunt", "junction").value_or(c.junction.r_shunt);
    }
    c.iv = range_from_json(doc, "iv", c.iv);
    if (doc.contains("iv")) {
        c.brownian_dt = io::optional_number(doc.at("iv"), "dt_eff", "iv").value_or(c.brownian_dt);
    }
    return c;
}

io::Json circuit_config_to_json(const CircuitConfig &c) {
    io::Json out;
    out["squid"] = {{"l1", c.squid.l1}, {"l2", c.squid.l2}, {"i_c1", c.squid.i_c1}, {"i_c2", c.squid.i_c2}};
    out["resonator"] = {{"f_r_hz", c.resonator.omega_r / (2.0 * kPi)}, {"l_r", c.resonator.l_r},
                        {"c_s", c.resonator.c_s}};
    if (c.target_omega0) {
        out["resonator"]["target_f0_hz"] = *c.target_omega0 / (2.0 * kPi);
    }
    out["sweep"] = {{"current_to_flux", c.current_to_flux}, {"i_start", c.sweep.start}, {"i_stop", c.sweep.stop},
                    {"points", c.sweep.points}};
    out["junction"] = {{"i_c", c.junction.i_c}, {"r_shunt", c.junction.r_shunt}};
    out["iv"] = {{"i_start", c.iv.start}, {"i_stop", c.iv.stop}, {"points", c.iv.points}, {"dt_eff", c.brownian_dt}};
    return out;
}

}  // namespace jpoim::circuit
