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

#include "jpoim/tile_model.h"

#include <string>

#include "jpoim/errors.h"

namespace jpoim::tile {

TileParams TileParams::uniform(double j_b, double j_a, double c_cnst) {
    return TileParams{{j_b, j_b, j_b, j_b}, j_a, j_a, c_cnst};
}

TileConfig::TileConfig(SpinConfig logical, SpinConfig ancilla)
    : logical_(std::move(logical)), ancilla_(std::move(ancilla)) {
    if (logical_.size() != 4 || ancilla_.size() != 2) {
        throw InvalidArgument("tile configuration needs 4 logical and 2 ancilla spins");
    }
}

TileConfig TileConfig::from_index(std::uint32_t index) {
    if (index >= 64) {
        throw InvalidArgument("tile index " + std::to_string(index) + " out of range");
    }
    return TileConfig(SpinConfig::from_index(index >> 2, 4), SpinConfig::from_index(index & 3U, 2));
}

int TileConfig::logical_parity() const {
    return parity(logical_);
}

std::uint32_t TileConfig::index() const {
    return static_cast<std::uint32_t>((logical_.index() << 2) | ancilla_.index());
}

SpinConfig TileConfig::as_spins() const {
    return SpinConfig::from_index(index(), kSpins);
}

double tile_energy(const TileParams &params, const TileConfig &config) {
    const SpinConfig &s = config.logical();
    const double product = config.logical_parity();
    double e = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        e += params.j[i] * s[i];
    }
    const double coupler = params.j_a1 * config.ancilla()[0] + params.j_a2 * config.ancilla()[1] + params.c_cnst;
    return e - coupler * product;
}

double tile_energy_effective(const TileParams &params, const TileConfig &config) {
    if (params.j_a1 != params.j_a2) {
        throw InvalidArgument("effective tile energy needs equal ancilla couplings");
    }
    const double j_a = params.j_a1;
    double e = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        e += params.j[i] * config.logical()[i];
    }
    const double coupler = j_a * config.ancilla()[0] + j_a * config.ancilla()[1] + params.c_cnst;
    return e - coupler * config.logical_parity();
}

TileGroundSet ground_set(const TileParams &params, const AncillaClamp &clamp) {
    if (clamp) {
        const SpinConfig ancilla{(*clamp)[0], (*clamp)[1]};
        auto found = enumerate_ground_states(
            [&](const SpinConfig &logical) { return tile_energy(params, TileConfig(logical, ancilla)); }, 4);
        TileGroundSet out{found.min_energy, {}};
        for (auto &logical : found.configs) {
            out.configs.emplace_back(std::move(logical), ancilla);
        }
        return out;
    }
    auto found = enumerate_ground_states(
        [&](const SpinConfig &s) {
            return tile_energy(params, TileConfig::from_index(static_cast<std::uint32_t>(s.index())));
        },
        TileConfig::kSpins);
    TileGroundSet out{found.min_energy, {}};
    for (const auto &s : found.configs) {
        out.configs.push_back(TileConfig::from_index(static_cast<std::uint32_t>(s.index())));
    }
    return out;
}

ParityReport lhz_parity_valid(const TileParams &params) {
    ParityReport report{true, {}};
    for (auto &c : ground_set(params).configs) {
        if (c.logical_parity() != 1) {
            report.valid = false;
            report.violations.push_back(std::move(c));
        }
    }
    return report;
}

std::vector<EnumerationRow> enumerate_tile(const TileParams &params) {
    std::vector<EnumerationRow> rows;
    rows.reserve(64);
    for (std::uint32_t idx = 0; idx < 64; ++idx) {
        TileConfig c = TileConfig::from_index(idx);
        const double e = tile_energy(params, c);
        rows.push_back({std::move(c), e});
    }
    return rows;
}

TileParams tile_params_from_json(const io::Json &doc, std::string_view where) {
    TileParams p;
    if (doc.is_object() && doc.contains("j_b")) {
        p.j.fill(io::number_field(doc, "j_b", where));
    } else {
        auto j = io::number_array(doc, "j", where);
        if (j.size() != 4) {
            throw ParseError("field '" + std::string(where) + (where.empty() ? "" : ".") +
                             "j': expected 4 entries, got " + std::to_string(j.size()));
        }
        std::copy(j.begin(), j.end(), p.j.begin());
    }
    if (auto j_a = io::optional_number(doc, "j_a", where)) {
        p.j_a1 = p.j_a2 = *j_a;
    } else {
        p.j_a1 = io::number_field(doc, "j_a1", where);
        p.j_a2 = io::number_field(doc, "j_a2", where);
    }
    p.c_cnst = io::number_field(doc, "c_cnst", where);
    return p;
}

io::Json tile_params_to_json(const TileParams &params) {
    return io::Json{{"j", params.j}, {"j_a1", params.j_a1}, {"j_a2", params.j_a2}, {"c_cnst", params.c_cnst}};
}

}  // namespace jpoim::tile
