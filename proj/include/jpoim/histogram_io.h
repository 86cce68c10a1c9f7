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

#ifndef JPOIM_HISTOGRAM_IO_H
#define JPOIM_HISTOGRAM_IO_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jpoim/problem_io.h"

namespace jpoim::report {

enum class Format { kCsv, kJson };

Format parse_format(std::string_view name);

/// Integer counts indexed by a `bits`-bit state (first spin most significant).
struct CountTable {
    std::size_t bits = 4;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
};

struct EmitOptions {
    Format format = Format::kCsv;
    /// Emit zero-count states too.
    bool dense = false;
    /// Merge every state with its bitwise complement, keeping the
    /// representative whose first bit is 1.
    bool canonical = false;
};

CountTable fold_global_flip(const CountTable &table);

std::string state_label(std::size_t state, std::size_t bits);

/// Probability formatted with six significant digits.
std::string format_probability(double p);

/// Metadata as "# key=value" lines, one per top-level key, keys sorted.
std::string csv_metadata_block(const io::Json &metadata);

/// CSV `state,count,probability` (rows sorted by state) after the metadata
/// block, or a JSON document {"metadata", "total", "histogram": [...]}.
/// Probabilities are relative to the table total.
std::string emit_histogram(const CountTable &table, const EmitOptions &options, const io::Json &metadata);

/// Reads the counts back from emit_histogram's JSON form.
CountTable parse_histogram_json(std::string_view text);

/// CSV `state,probability` or JSON for a probability vector over 2^bits states.
std::string emit_distribution(std::span<const double> probabilities, std::size_t bits, const EmitOptions &options,
                              const io::Json &metadata);

}  // namespace jpoim::report

#endif  // JPOIM_HISTOGRAM_IO_H
