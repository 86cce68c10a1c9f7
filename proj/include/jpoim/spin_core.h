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

#ifndef JPOIM_SPIN_CORE_H
#define JPOIM_SPIN_CORE_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jpoim {

/// Absolute energy tolerance for ground-set membership.
inline constexpr double kDegeneracyTolerance = 1e-9;

/// Largest spin count accepted by exhaustive enumeration.
inline constexpr std::size_t kMaxEnumerationSpins = 24;

/// Ordered spins, each exactly -1 or +1.
///
/// Bit convention (used everywhere a configuration is written as bits or an
/// integer index): bit b maps to spin 2b-1, so "1" is +1. In an index the
/// first spin is the most significant bit.
class SpinConfig {
   public:
    SpinConfig() = default;
    SpinConfig(std::initializer_list<int> spins);
    explicit SpinConfig(std::span<const int> spins);

    /// All-up configuration of length n.
    static SpinConfig all_up(std::size_t n);
    static SpinConfig from_index(std::uint64_t index, std::size_t n);
    static SpinConfig from_bits(std::string_view bits);

    std::size_t size() const noexcept {
        return spins_.size();
    }
    bool empty() const noexcept {
        return spins_.empty();
    }
    int operator[](std::size_t i) const noexcept {
        return spins_[i];
    }
    std::span<const std::int8_t> spins() const noexcept {
        return spins_;
    }

    void flip(std::size_t i) noexcept {
        spins_[i] = static_cast<std::int8_t>(-spins_[i]);
    }
    void set(std::size_t i, int spin);
    /// Overwrites every spin from an index of the same length.
    void assign_index(std::uint64_t index) noexcept;

    SpinConfig flipped() const;
    std::uint64_t index() const;
    std::string bits() const;

    friend bool operator==(const SpinConfig &, const SpinConfig &) = default;
    friend auto operator<=>(const SpinConfig &, const SpinConfig &) = default;

   private:
    std::vector<std::int8_t> spins_;
};

/// H = -sum_i h_i s_i - sum_{i<j} J_ij s_i s_j (each unordered pair once).
class IsingProblem {
   public:
    /// `couplings` is row-major n*n, symmetric with zero diagonal.
    IsingProblem(std::vector<double> fields, std::vector<double> couplings);
    static IsingProblem zeros(std::size_t n);

    std::size_t size() const noexcept {
        return fields_.size();
    }
    double field(std::size_t i) const noexcept {
        return fields_[i];
    }
    double coupling(std::size_t i, std::size_t j) const noexcept {
        return couplings_[i * size() + j];
    }
    std::span<const double> fields() const noexcept {
        return fields_;
    }
    std::span<const double> couplings() const noexcept {
        return couplings_;
    }
    bool has_fields() const noexcept;

   private:
    std::vector<double> fields_;
    std::vector<double> couplings_;
};

/// x^T Q x over x in {0,1}^n. Q is row-major n*n and symmetric.
class QuboProblem {
   public:
    explicit QuboProblem(std::vector<double> q);
    std::size_t size() const noexcept {
        return n_;
    }
    double operator()(std::size_t i, std::size_t j) const noexcept {
        return q_[i * n_ + j];
    }

   private:
    std::size_t n_ = 0;
    std::vector<double> q_;
};

struct IsingMapping {
    IsingProblem problem;
    double offset;
};

double ising_energy(const IsingProblem &problem, const SpinConfig &config);

/// Value of x^T Q x for x_i = (1 + s_i) / 2.
double qubo_energy(const QuboProblem &q, const SpinConfig &config);

/// Ising form with x = (1 + s) / 2, so that for every assignment
/// qubo_energy(q, s) == ising_energy(mapping.problem, s) + mapping.offset.
IsingMapping qubo_to_ising(const QuboProblem &q);

int parity(const SpinConfig &config);

using EnergyFunction = std::function<double(const SpinConfig &)>;

struct GroundStates {
    double min_energy;
    /// Sorted by index.
    std::vector<SpinConfig> configs;
};

/// Exhaustive search over all 2^n configurations. Every configuration within
/// `tolerance` of the exact minimum is returned. `energy` must be safe to call
/// concurrently when workers != 1; the result does not depend on workers.
GroundStates enumerate_ground_states(const EnergyFunction &energy, std::size_t n,
                                     double tolerance = kDegeneracyTolerance, unsigned workers = 1);

}  // namespace jpoim

#endif  // JPOIM_SPIN_CORE_H
