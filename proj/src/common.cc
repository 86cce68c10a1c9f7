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

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "jpoim/errors.h"
#include "jpoim/parallel.h"

namespace jpoim {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidArgument:
            return "invalid-argument";
        case ErrorKind::kCapacity:
            return "capacity";
        case ErrorKind::kParse:
            return "parse";
        case ErrorKind::kUnsupportedProblem:
            return "unsupported-problem";
        case ErrorKind::kDecode:
            return "decode";
        case ErrorKind::kDivergence:
            return "divergence";
        case ErrorKind::kInfeasibleCalibration:
            return "infeasible-calibration";
        case ErrorKind::kInsufficientData:
            return "insufficient-data";
        case ErrorKind::kAmbiguousPhase:
            return "ambiguous-phase";
        case ErrorKind::kNumerical:
            return "numerical";
        case ErrorKind::kIntegrationBlowup:
            return "integration-blowup";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
}

namespace {

std::string blowup_message(double t, double dt) {
    std::ostringstream os;
    os << "non-finite oscillator amplitude at t=" << t << " (dt=" << dt << ")";
    return os.str();
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

IntegrationBlowup::IntegrationBlowup(double t, double dt)
    : Error(ErrorKind::kIntegrationBlowup, blowup_message(t, dt)), t_(t), dt_(dt) {
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ splitmix64(index * 0xD1B54A32D192ED03ULL + 1));
}

unsigned default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> &body) {
    if (workers == 0) {
        workers = default_workers();
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                failed = true;
            }
        }
    };

    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back(worker);
    }
    for (auto &t : threads) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace jpoim
