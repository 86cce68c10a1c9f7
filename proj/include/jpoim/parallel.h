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

#ifndef JPOIM_PARALLEL_H
#define JPOIM_PARALLEL_H

#include <cstddef>
#include <cstdint>
#include <functional>

namespace jpoim {

/// Seed for stream `index` derived from `master` (SplitMix64 finalizer over a
/// counter). Streams depend only on (master, index), never on scheduling.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

/// Number of workers to use when the caller passes 0.
unsigned default_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on the worker count. The first exception thrown by
/// any body is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)> &body);

}  // namespace jpoim

#endif  // JPOIM_PARALLEL_H
