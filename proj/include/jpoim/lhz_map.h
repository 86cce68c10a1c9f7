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

#ifndef JPOIM_LHZ_MAP_H
#define JPOIM_LHZ_MAP_H

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "jpoim/problem_io.h"
#include "jpoim/spin_core.h"

namespace jpoim::lhz {

/// K = N(N-1)/2 physical spins for N logical spins.
std::size_t physical_count(std::size_t n);

/// K - N + 1 plaquette constraints.
std::size_t constraint_count(std::size_t n);

/// One slot of a plaquette: a physical spin, or a member of the fixed row
/// (pinned to +1).
struct TileMember {
    std::size_t index;
    bool fixed;

    friend bool operator==(const TileMember &, const TileMember &) = default;
};

/// Four-body constraint. Slots are ordered north, east, south, west.
struct Tile {
    static constexpr std::size_t kNorth = 0;
    static constexpr std::size_t kEast = 1;
    static constexpr std::size_t kSouth = 2;
    static constexpr std::size_t kWest = 3;

    std::array<TileMember, 4> members;

    bool touches_fixed_row() const noexcept;
};

/// Triangular LHZ layout for N logical spins.
///
/// Physical spin k stands for the product s_i s_j of a logical pair i < j
/// (0-based). Rows run from the base upward: row r holds the pairs (r, j) for
/// j = r+1 .. N-1, so the base row is (0, 1) .. (0, N-1) and the apex is
/// (N-2, N-1). Numbering is row-major, which coincides with the lexicographic
/// pair order.
///
/// Plaquette (i, j), 0 <= i, i+1 <= j <= N-2, joins pairs (i, j), (i, j+1),
/// (i+1, j+1) and (i+1, j). When j = i+1 the last pair would be diagonal; that
/// slot is taken by fixed-row spin i instead, which turns the three-body
/// corner into a four-body tile with one member pinned to +1.
class LhzLayout {
   public:
    explicit LhzLayout(std::size_t n);

    std::size_t n_logical() const noexcept {
        return n_;
    }
    std::size_t k_physical() const noexcept {
        return pairs_.size();
    }
    const std::vector<std::size_t> &rows() const noexcept {
        return rows_;
    }
    std::size_t fixed_row_size() const noexcept {
        return n_ - 2;
    }
    const std::vector<Tile> &tiles() const noexcept {
        return tiles_;
    }

    std::pair<std::size_t, std::size_t> pair_of(std::size_t k) const;
    std::size_t index_of(std::size_t i, std::size_t j) const;

    /// Number of tiles that include physical spin k.
    std::size_t tiles_containing(std::size_t k) const;

   private:
    std::size_t n_;
    std::vector<std::size_t> rows_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<Tile> tiles_;
};

LhzLayout build_layout(std::size_t n);

/// Local fields for the physical spins plus the plaquette penalty strength.
class LhzProblem {
   public:
    LhzProblem(std::vector<double> j_fields, double c_penalty);

    const std::vector<double> &j_fields() const noexcept {
        return j_fields_;
    }
    double c_penalty() const noexcept {
        return c_penalty_;
    }

   private:
    std::vector<double> j_fields_;
    double c_penalty_;
};

/// Physical fields for a pure-coupling logical problem, in canonical pair
/// order. J_k = -J_ij so that the constraint-satisfying energy reproduces the
/// logical energy -sum J_ij s_i s_j term by term.
std::vector<double> map_couplings(const IsingProblem &problem);

/// True when C does not exceed the largest |J_k|. The penalty may then fail
/// to dominate the field terms; this is advisory only.
bool penalty_possibly_weak(const LhzProblem &problem);

/// sum_k J_k s_k - C sum_l prod(tile l), fixed members counting as +1.
double lhz_energy(const LhzProblem &problem, const LhzLayout &layout, const SpinConfig &physical);

/// Product of the four members of `tile`.
int plaquette_product(const Tile &tile, const SpinConfig &physical);

std::optional<std::size_t> first_violated_tile(const LhzLayout &layout, const SpinConfig &physical);

/// Physical spins s_i s_j for every pair.
SpinConfig encode_logical(const SpinConfig &logical, const LhzLayout &layout);

/// Logical spins from the base row with the first logical spin fixed to +1.
/// Throws DecodeError naming the first violated tile.
SpinConfig decode_readout(const SpinConfig &physical, const LhzLayout &layout);

/// Rows, tile membership and the k <-> (i, j) table.
io::Json layout_to_json(const LhzLayout &layout);

}  // namespace jpoim::lhz

#endif  // JPOIM_LHZ_MAP_H
