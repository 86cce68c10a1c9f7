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

#ifndef JPOIM_TILE_MODEL_H
#define JPOIM_TILE_MODEL_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jpoim/problem_io.h"
#include "jpoim/spin_core.h"

namespace jpoim::tile {

/// Field strengths J1..J4, ancilla couplings and the penalty offset.
struct TileParams {
    std::array<double, 4> j{};
    double j_a1 = 0.0;
    double j_a2 = 0.0;
    double c_cnst = 0.0;

    /// All four fields equal to j_b, both ancillas j_a.
    static TileParams uniform(double j_b, double j_a, double c_cnst);
};

/// Four logical spins and two ancillas.
class TileConfig {
   public:
    static constexpr std::size_t kSpins = 6;

    TileConfig(SpinConfig logical, SpinConfig ancilla);
    /// Six-bit index: s1 is the most significant bit, a2 the least.
    static TileConfig from_index(std::uint32_t index);

    const SpinConfig &logical() const noexcept {
        return logical_;
    }
    const SpinConfig &ancilla() const noexcept {
        return ancilla_;
    }
    /// Product of the four logical spins.
    int logical_parity() const;
    std::uint32_t index() const;
    SpinConfig as_spins() const;

    friend bool operator==(const TileConfig &, const TileConfig &) = default;

   private:
    SpinConfig logical_;
    SpinConfig ancilla_;
};

/// sum_i J_i s_i - (J_a1 a1 + J_a2 a2 + C) * prod_i s_i
double tile_energy(const TileParams &params, const TileConfig &config);

/// The same energy written with one shared ancilla strength,
/// sum_i J_i s_i - (J_a a2 + J_a a1 + C) * prod_i s_i.
/// Requires j_a1 == j_a2.
double tile_energy_effective(const TileParams &params, const TileConfig &config);

/// Optionally pins the ancillas while the logical spins are minimized.
using AncillaClamp = std::optional<std::array<int, 2>>;

struct TileGroundSet {
    double min_energy;
    std::vector<TileConfig> configs;
};

/// Exact minimum over all 64 configurations (16 with a clamp).
TileGroundSet ground_set(const TileParams &params, const AncillaClamp &clamp = std::nullopt);

struct ParityReport {
    bool valid;
    std::vector<TileConfig> violations;
};

/// Whether every ground configuration has even logical parity.
ParityReport lhz_parity_valid(const TileParams &params);

struct EnumerationRow {
    TileConfig config;
    double energy;
};

/// All 64 configurations in index order.
std::vector<EnumerationRow> enumerate_tile(const TileParams &params);

/// {"j": [J1..J4], "j_a1": .., "j_a2": .., "c_cnst": ..}; "j_a" may replace
/// both ancilla entries and "j_b" may replace the field list.
TileParams tile_params_from_json(const io::Json &doc, std::string_view where = "");
io::Json tile_params_to_json(const TileParams &params);

}  // namespace jpoim::tile

#endif  // JPOIM_TILE_MODEL_H
