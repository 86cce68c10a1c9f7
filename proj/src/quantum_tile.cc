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

#include "jpoim/quantum_tile.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>

#include "jpoim/errors.h"
#include "jpoim/parallel.h"

namespace jpoim::quantum {

namespace {

// Basis index 1 carries sigma = +1.
Eigen::Matrix2d pauli_z() {
    Eigen::Matrix2d m;
    m << -1, 0, 0, 1;
    return m;
}

Eigen::Matrix2d pauli_x() {
    Eigen::Matrix2d m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

}  // namespace

HamiltonianMatrix embed_single(const Eigen::Matrix2d &op, std::size_t spin) {
    if (spin >= kTileSpins) {
        throw InvalidArgument("spin index " + std::to_string(spin) + " out of range for a six-spin tile");
    }
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(1, 1);
    for (std::size_t s = 0; s < kTileSpins; ++s) {
        acc = kron(acc, s == spin ? Eigen::MatrixXd(op) : Eigen::MatrixXd::Identity(2, 2));
    }
    return acc;
}

HamiltonianMatrix build_hamiltonian(const QuantumTileParams &params) {
    const Eigen::Matrix2d z = pauli_z();
    const Eigen::Matrix2d x = pauli_x();

    HamiltonianMatrix field = HamiltonianMatrix::Zero();
    HamiltonianMatrix logical_product = HamiltonianMatrix::Identity();
    for (std::size_t i = 0; i < 4; ++i) {
        const HamiltonianMatrix zi = embed_single(z, i);
        field += params.j[i] * zi;
        logical_product = logical_product * zi;
    }
    const HamiltonianMatrix coupler = params.j_a * embed_single(x, 4) + params.j_a * embed_single(x, 5) +
                                      params.j_c * HamiltonianMatrix::Identity();
    return field - coupler * logical_product;
}

GroundStateResult ground_states(const HamiltonianMatrix &h, std::optional<double> tolerance) {
    if (!h.allFinite()) {
        throw InvalidArgument("Hamiltonian has non-finite entries");
    }
    const double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    const double scale = h.cwiseAbs().maxCoeff();
    if (asym > 1e-12 * std::max(1.0, scale)) {
        throw InvalidArgument("Hamiltonian is not symmetric");
    }

    Eigen::SelfAdjointEigenSolver<HamiltonianMatrix> solver(h);
    const int max_iterations = 30 * static_cast<int>(kDimension);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("symmetric eigensolver did not converge", std::numeric_limits<double>::infinity(),
                             max_iterations);
    }
    const auto &values = solver.eigenvalues();
    const auto &vectors = solver.eigenvectors();
    const double e_min = values(0);
    const double range = values(kDimension - 1) - e_min;
    const double tol = tolerance.value_or(kRelativeDegeneracyTolerance * range);
    const double norm = std::max(std::abs(values(0)), std::abs(values(kDimension - 1)));

    GroundStateResult out{e_min, {}, 0, std::nullopt};
    out.weights.fill(0.0);
    for (std::size_t k = 0; k < kDimension; ++k) {
        if (values(k) > e_min + tol) {
            out.gap = values(k) - e_min;
            break;
        }
        const auto v = vectors.col(k);
        const double residual = (h * v - values(k) * v).norm();
        if (residual > kResidualBound * norm + std::numeric_limits<double>::min()) {
            throw NumericalError("eigenpair residual " + std::to_string(residual) + " exceeds bound", residual,
                                 max_iterations);
        }
        for (std::size_t b = 0; b < kDimension; ++b) {
            out.weights[b] += v(b) * v(b);
        }
        ++out.degeneracy;
    }
    double total = 0.0;
    for (double &w : out.weights) {
        if (w < kWeightFloor) {
            w = 0.0;
        }
        total += w;
    }
    for (double &w : out.weights) {
        w /= total;
    }
    return out;
}

std::string_view noise_distribution_name(NoiseDistribution d) {
    return d == NoiseDistribution::kNormal ? "normal" : "uniform";
}

NoiseDistribution parse_noise_distribution(std::string_view name) {
    if (name == "uniform") {
        return NoiseDistribution::kUniform;
    }
    if (name == "normal") {
        return NoiseDistribution::kNormal;
    }
    throw InvalidArgument("unknown noise distribution '" + std::string(name) + "' (expected uniform or normal)");
}

std::vector<std::size_t> StateDistribution::support(double threshold) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < kLogicalStates; ++s) {
        if (probabilities[s] > threshold) {
            out.push_back(s);
        }
    }
    return out;
}

std::array<double, kLogicalStates> logical_marginal(const std::array<double, kDimension> &weights) {
    std::array<double, kLogicalStates> out{};
    for (std::size_t b = 0; b < kDimension; ++b) {
        out[b >> 2] += weights[b];
    }
    return out;
}

namespace {

void validate_noise(const NoiseSpec &noise) {
    if (!(noise.thermal_coefficient >= 0.0) || !std::isfinite(noise.thermal_coefficient)) {
        throw InvalidArgument("thermal coefficient must be finite and non-negative");
    }
}

std::array<double, kLogicalStates> noisy_trial(const HamiltonianMatrix &base, const NoiseSpec &noise,
                                               std::size_t trial) {
    if (noise.thermal_coefficient == 0.0) {
        return logical_marginal(ground_states(base).weights);
    }
    std::mt19937_64 rng(split_seed(noise.seed, trial));
    HamiltonianMatrix h = base;
    if (noise.distribution == NoiseDistribution::kNormal) {
        std::normal_distribution<double> draw(0.0, 1.0);
        for (std::size_t b = 0; b < kDimension; ++b) {
            h(b, b) += noise.thermal_coefficient * draw(rng);
        }
    } else {
        std::uniform_real_distribution<double> draw(-1.0, 1.0);
        for (std::size_t b = 0; b < kDimension; ++b) {
            h(b, b) += noise.thermal_coefficient * draw(rng);
        }
    }
    return logical_marginal(ground_states(h).weights);
}

StateDistribution average(const std::vector<std::array<double, kLogicalStates>> &per_trial) {
    StateDistribution out;
    for (const auto &m : per_trial) {
        for (std::size_t s = 0; s < kLogicalStates; ++s) {
            out.probabilities[s] += m[s];
        }
    }
    double total = 0.0;
    for (double p : out.probabilities) {
        total += p;
    }
    for (double &p : out.probabilities) {
        p /= total;
    }
    return out;
}

}  // namespace

StateDistribution logical_distribution(const QuantumTileParams &params, const NoiseSpec &noise, std::size_t trials,
                                       unsigned workers) {
    return sweep_distribution(params.j_a, params.j_c, {params.j}, noise, trials, workers);
}

std::vector<std::array<double, 4>> sign_pattern_sweep(const std::vector<double> &magnitudes) {
    std::set<std::array<double, 4>> seen;
    std::vector<std::array<double, 4>> out;
    for (double m : magnitudes) {
        for (unsigned pattern = 0; pattern < 16; ++pattern) {
            std::array<double, 4> f{};
            for (std::size_t i = 0; i < 4; ++i) {
                f[i] = m == 0.0 ? 0.0 : (((pattern >> (3 - i)) & 1U) ? m : -m);
            }
            if (seen.insert(f).second) {
                out.push_back(f);
            }
        }
    }
    return out;
}

std::vector<std::array<double, 4>> default_sweep(double j_c) {
    return sign_pattern_sweep({0.0, j_c / 4.0});
}

StateDistribution sweep_distribution(double j_a, double j_c, const std::vector<std::array<double, 4>> &sweep,
                                     const NoiseSpec &noise, std::size_t trials, unsigned workers) {
    if (trials == 0) {
        throw InvalidArgument("trial count must be at least 1");
    }
    if (sweep.empty()) {
        throw InvalidArgument("field sweep is empty");
    }
    validate_noise(noise);
    std::vector<HamiltonianMatrix> bases;
    bases.reserve(sweep.size());
    for (const auto &f : sweep) {
        bases.push_back(build_hamiltonian({f, j_a, j_c}));
    }
    std::vector<std::array<double, kLogicalStates>> per_trial(trials);
    parallel_for(trials, workers,
                 [&](std::size_t t) { per_trial[t] = noisy_trial(bases[t % bases.size()], noise, t); });
    return average(per_trial);
}

double sweep_gap(double j_a, double j_c, const std::vector<std::array<double, 4>> &sweep) {
    double gap = std::numeric_limits<double>::infinity();
    for (const auto &f : sweep) {
        auto g = ground_states(build_hamiltonian({f, j_a, j_c})).gap;
        if (g) {
            gap = std::min(gap, *g);
        }
    }
    return gap;
}

QuantumTileParams quantum_params_from_json(const io::Json &doc, std::string_view where) {
    QuantumTileParams p;
    if (doc.is_object() && doc.contains("j_b")) {
        p.j.fill(io::number_field(doc, "j_b", where));
    } else {
        auto j = io::number_array(doc, "j", where);
        if (j.size() != 4) {
            throw ParseError("field 'j': expected 4 entries, got " + std::to_string(j.size()));
        }
        std::copy(j.begin(), j.end(), p.j.begin());
    }
    auto j_a = io::optional_number(doc, "j_a", where);
    if (!j_a) {
        const double a1 = io::number_field(doc, "j_a1", where);
        const double a2 = io::number_field(doc, "j_a2", where);
        if (a1 != a2) {
            throw ParseError("quantum tile model needs j_a1 == j_a2");
        }
        j_a = a1;
    }
    p.j_a = *j_a;
    if (auto j_c = io::optional_number(doc, "j_c", where)) {
        p.j_c = *j_c;
    } else {
        p.j_c = io::number_field(doc, "c_cnst", where);
    }
    return p;
}

}  // namespace jpoim::quantum
