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

#include "jpoim/lhz_map.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "jpoim/errors.h"

namespace jpoim::lhz {

namespace {

void require_logical(std::size_t n, std::size_t minimum) {
    if (n < minimum) {
        throw InvalidArgument("LHZ mapping needs at least " + std::to_string(minimum) + " logical spins, got " +
                              std::to_string(n));
    }
}

}  // namespace

std::size_t physical_count(std::size_t n) {
    require_logical(n, 2);
    return n * (n - 1) / 2;
}

std::size_t constraint_count(std::size_t n) {
    return physical_count(n) - n + 1;
}

bool Tile::touches_fixed_row() const noexcept {
    return std::any_of(members.begin(), members.end(), [](const TileMember &m) { return m.fixed; });
}

LhzLayout::LhzLayout(std::size_t n) : n_(n) {
    require_logical(n, 3);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        rows_.push_back(n - 1 - r);
        for (std::size_t j = r + 1; j < n; ++j) {
            pairs_.emplace_back(r, j);
        }
    }
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            Tile t;
            t.members[Tile::kSouth] = {index_of(i, j), false};
            t.members[Tile::kEast] = {index_of(i, j + 1), false};
            t.members[Tile::kNorth] = {index_of(i + 1, j + 1), false};
            t.members[Tile::kWest] = (j == i + 1) ? TileMember{i, true} : TileMember{index_of(i + 1, j), false};
            tiles_.push_back(t);
        }
    }
}

std::pair<std::size_t, std::size_t> LhzLayout::pair_of(std::size_t k) const {
    if (k >= pairs_.size()) {
        throw InvalidArgument("physical index " + std::to_string(k) + " out of range");
    }
    return pairs_[k];
}

std::size_t LhzLayout::index_of(std::size_t i, std::size_t j) const {
    if (i > j) {
        std::swap(i, j);
    }
    if (i == j || j >= n_) {
        throw InvalidArgument("no physical spin for logical pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ")");
    }
    // Rows before i hold (n-1) + (n-2) + ... + (n-i) spins.
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

std::size_t LhzLayout::tiles_containing(std::size_t k) const {
    std::size_t count = 0;
    for (const auto &t : tiles_) {
        for (const auto &m : t.members) {
            if (!m.fixed && m.index == k) {
                ++count;
            }
        }
    }
    return count;
}

LhzLayout build_layout(std::size_t n) {
    return LhzLayout(n);
}

LhzProblem::LhzProblem(std::vector<double> j_fields, double c_penalty)
    : j_fields_(std::move(j_fields)), c_penalty_(c_penalty) {
    if (!(c_penalty_ > 0.0)) {
        throw InvalidArgument("penalty strength C must be positive");
    }
}

std::vector<double> map_couplings(const IsingProblem &problem) {
    if (problem.has_fields()) {
        throw Error(ErrorKind::kUnsupportedProblem,
                    "LHZ mapping covers pure coupling problems only; local fields h must be zero");
    }
    const std::size_t n = problem.size();
    require_logical(n, 3);
    std::vector<double> fields;
    fields.reserve(physical_count(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            fields.push_back(-problem.coupling(i, j));
        }
    }
    return fields;
}

bool penalty_possibly_weak(const LhzProblem &problem) {
    double largest = 0.0;
    for (double j : problem.j_fields()) {
        largest = std::max(largest, std::abs(j));
    }
    return problem.c_penalty() <= largest;
}

int plaquette_product(const Tile &tile, const SpinConfig &physical) {
    int p = 1;
    for (const auto &m : tile.members) {
        if (!m.fixed) {
            p *= physical[m.index];
        }
    }
    return p;
}

double lhz_energy(const LhzProblem &problem, const LhzLayout &layout, const SpinConfig &physical) {
    const std::size_t k = layout.k_physical();
    if (physical.size() != k) {
        throw InvalidArgument("physical configuration has " + std::to_string(physical.size()) +
                              " spins, layout has " + std::to_string(k));
    }
    if (problem.j_fields().size() != k) {
        throw InvalidArgument("problem has " + std::to_string(problem.j_fields().size()) +
                              " local fields, layout has " + std::to_string(k));
    }
    double e = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        e += problem.j_fields()[i] * physical[i];
    }
    for (const auto &t : layout.tiles()) {
        e -= problem.c_penalty() * plaquette_product(t, physical);
    }
    return e;
}

std::optional<std::size_t> first_violated_tile(const LhzLayout &layout, const SpinConfig &physical) {
    if (physical.size() != layout.k_physical()) {
        throw InvalidArgument("physical configuration length does not match layout");
    }
    for (std::size_t l = 0; l < layout.tiles().size(); ++l) {
        if (plaquette_product(layout.tiles()[l], physical) != 1) {
            return l;
        }
    }
    return std::nullopt;
}

SpinConfig encode_logical(const SpinConfig &logical, const LhzLayout &layout) {
    if (logical.size() != layout.n_logical()) {
        throw InvalidArgument("logical configuration has " + std::to_string(logical.size()) +
                              " spins, layout expects " + std::to_string(layout.n_logical()));
    }
    SpinConfig physical = SpinConfig::all_up(layout.k_physical());
    for (std::size_t k = 0; k < layout.k_physical(); ++k) {
        auto [i, j] = layout.pair_of(k);
        physical.set(k, logical[i] * logical[j]);
    }
    return physical;
}

SpinConfig decode_readout(const SpinConfig &physical, const LhzLayout &layout) {
    if (auto bad = first_violated_tile(layout, physical)) {
        throw DecodeError(*bad, "readout violates the constraint of tile " + std::to_string(*bad));
    }
    const std::size_t n = layout.n_logical();
    SpinConfig logical = SpinConfig::all_up(n);
    for (std::size_t j = 1; j < n; ++j) {
        logical.set(j, physical[layout.index_of(0, j)]);
    }
    return logical;
}

io::Json layout_to_json(const LhzLayout &layout) {
    io::Json out;
    out["n_logical"] = layout.n_logical();
    out["k_physical"] = layout.k_physical();
    out["rows"] = layout.rows();
    out["fixed_row"] = std::vector<int>(layout.fixed_row_size(), 1);
    io::Json pairs = io::Json::array();
    for (std::size_t k = 0; k < layout.k_physical(); ++k) {
        auto [i, j] = layout.pair_of(k);
        pairs.push_back({{"k", k}, {"i", i}, {"j", j}});
    }
    out["pairs"] = std::move(pairs);
    io::Json tiles = io::Json::array();
    static constexpr const char *kSlotNames[4] = {"north", "east", "south", "west"};
    for (const auto &t : layout.tiles()) {
        io::Json tile;
        for (std::size_t s = 0; s < 4; ++s) {
            tile[kSlotNames[s]] = {{"index", t.members[s].index}, {"fixed", t.members[s].fixed}};
        }
        tiles.push_back(std::move(tile));
    }
    out["tiles"] = std::move(tiles);
    return out;
}

}  // namespace jpoim::lhz
