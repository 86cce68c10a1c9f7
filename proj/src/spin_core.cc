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

#include "jpoim/spin_core.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jpoim/errors.h"
#include "jpoim/parallel.h"

namespace jpoim {

namespace {

bool nearly_equal(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

void require_spin(int s) {
    if (s != 1 && s != -1) {
        throw InvalidArgument("spin value must be -1 or +1, got " + std::to_string(s));
    }
}

std::size_t square_side(std::size_t count, const char *what) {
    auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
    if (n * n != count) {
        throw InvalidArgument(std::string(what) + " must be a square matrix, got " + std::to_string(count) +
                              " entries");
    }
    return n;
}

}  // namespace

SpinConfig::SpinConfig(std::initializer_list<int> spins) {
    spins_.reserve(spins.size());
    for (int s : spins) {
        require_spin(s);
        spins_.push_back(static_cast<std::int8_t>(s));
    }
}

SpinConfig::SpinConfig(std::span<const int> spins) {
    spins_.reserve(spins.size());
    for (int s : spins) {
        require_spin(s);
        spins_.push_back(static_cast<std::int8_t>(s));
    }
}

SpinConfig SpinConfig::all_up(std::size_t n) {
    SpinConfig c;
    c.spins_.assign(n, 1);
    return c;
}

SpinConfig SpinConfig::from_index(std::uint64_t index, std::size_t n) {
    if (n > 64) {
        throw InvalidArgument("index form supports at most 64 spins");
    }
    if (n < 64 && (index >> n) != 0) {
        throw InvalidArgument("index " + std::to_string(index) + " out of range for " + std::to_string(n) + " spins");
    }
    SpinConfig c = all_up(n);
    c.assign_index(index);
    return c;
}

SpinConfig SpinConfig::from_bits(std::string_view bits) {
    SpinConfig c;
    c.spins_.reserve(bits.size());
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw InvalidArgument("bit string may only contain '0' and '1'");
        }
        c.spins_.push_back(ch == '1' ? 1 : -1);
    }
    return c;
}

void SpinConfig::set(std::size_t i, int spin) {
    require_spin(spin);
    spins_.at(i) = static_cast<std::int8_t>(spin);
}

void SpinConfig::assign_index(std::uint64_t index) noexcept {
    const std::size_t n = spins_.size();
    for (std::size_t i = 0; i < n; ++i) {
        spins_[i] = ((index >> (n - 1 - i)) & 1U) ? 1 : -1;
    }
}

SpinConfig SpinConfig::flipped() const {
    SpinConfig c = *this;
    for (auto &s : c.spins_) {
        s = static_cast<std::int8_t>(-s);
    }
    return c;
}

std::uint64_t SpinConfig::index() const {
    if (spins_.size() > 64) {
        throw InvalidArgument("index form supports at most 64 spins");
    }
    std::uint64_t v = 0;
    for (auto s : spins_) {
        v = (v << 1) | (s > 0 ? 1U : 0U);
    }
    return v;
}

std::string SpinConfig::bits() const {
    std::string out;
    out.reserve(spins_.size());
    for (auto s : spins_) {
        out.push_back(s > 0 ? '1' : '0');
    }
    return out;
}

IsingProblem::IsingProblem(std::vector<double> fields, std::vector<double> couplings)
    : fields_(std::move(fields)), couplings_(std::move(couplings)) {
    const std::size_t n = fields_.size();
    if (n == 0) {
        throw InvalidArgument("Ising problem needs at least one spin");
    }
    if (couplings_.size() != n * n) {
        throw InvalidArgument("coupling matrix has " + std::to_string(couplings_.size()) + " entries, expected " +
                              std::to_string(n * n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (couplings_[i * n + i] != 0.0) {
            throw InvalidArgument("coupling matrix diagonal must be zero (J[" + std::to_string(i) + "][" +
                                  std::to_string(i) + "])");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!nearly_equal(couplings_[i * n + j], couplings_[j * n + i])) {
                throw InvalidArgument("coupling matrix is not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
        }
    }
}

IsingProblem IsingProblem::zeros(std::size_t n) {
    return IsingProblem(std::vector<double>(n, 0.0), std::vector<double>(n * n, 0.0));
}

bool IsingProblem::has_fields() const noexcept {
    return std::any_of(fields_.begin(), fields_.end(), [](double h) { return h != 0.0; });
}

QuboProblem::QuboProblem(std::vector<double> q) : n_(square_side(q.size(), "QUBO matrix")), q_(std::move(q)) {
    if (n_ == 0) {
        throw InvalidArgument("QUBO needs at least one variable");
    }
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!nearly_equal(q_[i * n_ + j], q_[j * n_ + i])) {
                throw InvalidArgument("QUBO matrix is not symmetric at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
            }
        }
    }
}

double ising_energy(const IsingProblem &problem, const SpinConfig &config) {
    const std::size_t n = problem.size();
    if (config.size() != n) {
        throw InvalidArgument("configuration has " + std::to_string(config.size()) + " spins, problem has " +
                              std::to_string(n));
    }
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        e -= problem.field(i) * config[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            e -= problem.coupling(i, j) * config[i] * config[j];
        }
    }
    return e;
}

double qubo_energy(const QuboProblem &q, const SpinConfig &config) {
    const std::size_t n = q.size();
    if (config.size() != n) {
        throw InvalidArgument("configuration length does not match QUBO size");
    }
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (config[i] < 0) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (config[j] > 0) {
                e += q(i, j);
            }
        }
    }
    return e;
}

IsingMapping qubo_to_ising(const QuboProblem &q) {
    // x_i x_j = (1 + s_i + s_j + s_i s_j) / 4 off the diagonal, x_i^2 = (1 + s_i) / 2 on it.
    const std::size_t n = q.size();
    std::vector<double> h(n, 0.0);
    std::vector<double> j(n * n, 0.0);
    double offset = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        offset += q(a, a) / 2.0;
        double linear = q(a, a) / 2.0;
        for (std::size_t b = 0; b < n; ++b) {
            if (b == a) {
                continue;
            }
            offset += q(a, b) / 4.0;
            linear += (q(a, b) + q(b, a)) / 4.0;
        }
        h[a] = -linear;
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const double pair = -(q(a, b) + q(b, a)) / 4.0;
            j[a * n + b] = pair;
            j[b * n + a] = pair;
        }
    }
    return IsingMapping{IsingProblem(std::move(h), std::move(j)), offset};
}

int parity(const SpinConfig &config) {
    if (config.empty()) {
        throw InvalidArgument("parity of an empty configuration is undefined");
    }
    int p = 1;
    for (auto s : config.spins()) {
        p *= s;
    }
    return p;
}

GroundStates enumerate_ground_states(const EnergyFunction &energy, std::size_t n, double tolerance,
                                     unsigned workers) {
    if (n == 0) {
        throw InvalidArgument("enumeration needs at least one spin");
    }
    if (n > kMaxEnumerationSpins) {
        throw Error(ErrorKind::kCapacity, "exhaustive enumeration is limited to " +
                                              std::to_string(kMaxEnumerationSpins) + " spins, got " +
                                              std::to_string(n));
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
    const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);

    struct Partial {
        double min = std::numeric_limits<double>::infinity();
        std::vector<std::pair<std::uint64_t, double>> candidates;
    };
    std::vector<Partial> partials(chunks);

    parallel_for(chunks, workers, [&](std::size_t c) {
        Partial &part = partials[c];
        SpinConfig config = SpinConfig::all_up(n);
        const std::uint64_t begin = c * kChunk;
        const std::uint64_t end = std::min(total, begin + kChunk);
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            config.assign_index(idx);
            const double e = energy(config);
            if (e < part.min) {
                part.min = e;
                std::erase_if(part.candidates, [&](const auto &cand) { return cand.second > e + tolerance; });
            }
            if (e <= part.min + tolerance) {
                part.candidates.emplace_back(idx, e);
            }
        }
    });

    double global_min = std::numeric_limits<double>::infinity();
    for (const auto &p : partials) {
        global_min = std::min(global_min, p.min);
    }
    GroundStates out{global_min, {}};
    for (const auto &p : partials) {
        for (const auto &[idx, e] : p.candidates) {
            if (e <= global_min + tolerance) {
                out.configs.push_back(SpinConfig::from_index(idx, n));
            }
        }
    }
    return out;
}

}  // namespace jpoim
