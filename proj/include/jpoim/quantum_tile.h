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

#ifndef JPOIM_QUANTUM_TILE_H
#define JPOIM_QUANTUM_TILE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "jpoim/problem_io.h"

namespace jpoim::quantum {

inline constexpr std::size_t kTileSpins = 6;
inline constexpr std::size_t kDimension = std::size_t{1} << kTileSpins;
inline constexpr std::size_t kLogicalStates = 16;

/// Real symmetric operator on the six-spin z basis. Basis index bit 5 is
/// spin 1 (most significant); spins 5 and 6 are the ancillas.
using HamiltonianMatrix = Eigen::Matrix<double, kDimension, kDimension>;

struct QuantumTileParams {
    std::array<double, 4> j{};
    double j_a = 0.0;
    double j_c = 0.0;
};

/// H = sum_i J_i Z_i - (J_a X_5 + J_a X_6 + J_C) Z_1 Z_2 Z_3 Z_4, assembled
/// from Kronecker products of single-spin Pauli matrices.
HamiltonianMatrix build_hamiltonian(const QuantumTileParams &params);

/// Single-spin operator `op` acting on spin `spin` (0-based) of the tile.
HamiltonianMatrix embed_single(const Eigen::Matrix2d &op, std::size_t spin);

struct GroundStateResult {
    double e_min;
    /// Squared amplitude of each basis state summed over an orthonormal basis
    /// of the ground eigenspace, normalized to 1.
    std::array<double, kDimension> weights;
    std::size_t degeneracy;
    /// Smallest eigenvalue above the ground eigenspace minus e_min; empty when
    /// the whole spectrum is degenerate.
    std::optional<double> gap;
};

/// Default degeneracy tolerance: 1e-9 of the spectral range.
inline constexpr double kRelativeDegeneracyTolerance = 1e-9;

/// Residual bound on every ground eigenpair: ||Hv - lv|| <= 1e-10 ||H||.
inline constexpr double kResidualBound = 1e-10;

/// Basis weights below this are reported as exactly zero.
inline constexpr double kWeightFloor = 1e-14;

GroundStateResult ground_states(const HamiltonianMatrix &h, std::optional<double> tolerance = std::nullopt);

enum class NoiseDistribution { kUniform, kNormal };

std::string_view noise_distribution_name(NoiseDistribution d);
NoiseDistribution parse_noise_distribution(std::string_view name);

/// Diagonal random energy added per trial: thermal_coefficient times an
/// i.i.d. draw per basis state (uniform on [-1, 1] or standard normal).
struct NoiseSpec {
    double thermal_coefficient = 0.0;
    NoiseDistribution distribution = NoiseDistribution::kUniform;
    std::uint64_t seed = 0;
};

struct StateDistribution {
    /// Indexed by the four logical bits, spin 1 most significant.
    std::array<double, kLogicalStates> probabilities{};

    std::vector<std::size_t> support(double threshold = 0.0) const;
};

/// Logical marginal of a basis-state weight vector.
std::array<double, kLogicalStates> logical_marginal(const std::array<double, kDimension> &weights);

/// Trial-averaged logical histogram. Each trial draws a fresh noise matrix
/// from its own stream split from noise.seed.
StateDistribution logical_distribution(const QuantumTileParams &params, const NoiseSpec &noise, std::size_t trials,
                                       unsigned workers = 1);

/// Field vectors for the sweep driver: every sign pattern of each magnitude,
/// with duplicates (magnitude 0) removed.
std::vector<std::array<double, 4>> sign_pattern_sweep(const std::vector<double> &magnitudes);

/// Magnitudes {0, J_C/4}.
std::vector<std::array<double, 4>> default_sweep(double j_c);

/// Histogram over a field sweep: trial t uses field vector t mod |sweep|.
StateDistribution sweep_distribution(double j_a, double j_c, const std::vector<std::array<double, 4>> &sweep,
                                     const NoiseSpec &noise, std::size_t trials, unsigned workers = 1);

/// Smallest ground-state gap over the sweep, noise free.
double sweep_gap(double j_a, double j_c, const std::vector<std::array<double, 4>> &sweep);

QuantumTileParams quantum_params_from_json(const io::Json &doc, std::string_view where = "");

}  // namespace jpoim::quantum

#endif  // JPOIM_QUANTUM_TILE_H
