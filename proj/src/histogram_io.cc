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

#include "jpoim/histogram_io.h"

#include <iomanip>
#include <sstream>

#include "jpoim/errors.h"

namespace jpoim::report {

namespace {

void check_table(const CountTable &t) {
    if (t.bits == 0 || t.bits > 16 || t.counts.size() != (std::size_t{1} << t.bits)) {
        throw InvalidArgument("count table size does not match its bit width");
    }
}

std::size_t complement(std::size_t state, std::size_t bits) {
    return (~state) & ((std::size_t{1} << bits) - 1);
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") {
        return Format::kCsv;
    }
    if (name == "json") {
        return Format::kJson;
    }
    throw InvalidArgument("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

std::uint64_t CountTable::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) {
        sum += c;
    }
    return sum;
}

CountTable fold_global_flip(const CountTable &table) {
    check_table(table);
    CountTable out{table.bits, std::vector<std::uint64_t>(table.counts.size(), 0)};
    const std::size_t top = std::size_t{1} << (table.bits - 1);
    for (std::size_t s = 0; s < table.counts.size(); ++s) {
        const std::size_t rep = (s & top) ? s : complement(s, table.bits);
        out.counts[rep] += table.counts[s];
    }
    return out;
}

std::string state_label(std::size_t state, std::size_t bits) {
    std::string out(bits, '0');
    for (std::size_t b = 0; b < bits; ++b) {
        if ((state >> (bits - 1 - b)) & 1U) {
            out[b] = '1';
        }
    }
    return out;
}

std::string format_probability(double p) {
    std::ostringstream os;
    os << std::setprecision(6) << p;
    return os.str();
}

std::string csv_metadata_block(const io::Json &metadata) {
    std::ostringstream os;
    for (auto it = metadata.begin(); it != metadata.end(); ++it) {
        os << "# " << it.key() << '=' << (it->is_string() ? it->get<std::string>() : it->dump()) << '\n';
    }
    return os.str();
}

std::string emit_histogram(const CountTable &input, const EmitOptions &options, const io::Json &metadata) {
    check_table(input);
    const CountTable table = options.canonical ? fold_global_flip(input) : input;
    const std::uint64_t total = table.total();
    auto prob = [&](std::uint64_t c) { return total == 0 ? 0.0 : static_cast<double>(c) / static_cast<double>(total); };

    if (options.format == Format::kJson) {
        io::Json rows = io::Json::array();
        for (std::size_t s = 0; s < table.counts.size(); ++s) {
            if (table.counts[s] == 0 && !options.dense) {
                continue;
            }
            rows.push_back({{"state", state_label(s, table.bits)},
                            {"count", table.counts[s]},
                            {"probability", std::stod(format_probability(prob(table.counts[s])))}});
        }
        io::Json doc{{"metadata", metadata}, {"bits", table.bits}, {"total", total}, {"histogram", rows}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << csv_metadata_block(metadata);
    os << "state,count,probability\n";
    for (std::size_t s = 0; s < table.counts.size(); ++s) {
        if (table.counts[s] == 0 && !options.dense) {
            continue;
        }
        os << state_label(s, table.bits) << ',' << table.counts[s] << ',' << format_probability(prob(table.counts[s]))
           << '\n';
    }
    return os.str();
}

CountTable parse_histogram_json(std::string_view text) {
    const io::Json doc = io::parse_json(text, "<histogram>");
    CountTable out;
    out.bits = static_cast<std::size_t>(io::count_field(doc, "bits", ""));
    if (out.bits == 0 || out.bits > 16) {
        throw ParseError("field 'bits': out of range");
    }
    out.counts.assign(std::size_t{1} << out.bits, 0);
    const io::Json &rows = doc.at("histogram");
    for (const auto &row : rows) {
        const auto label = row.at("state").get<std::string>();
        if (label.size() != out.bits) {
            throw ParseError("histogram state '" + label + "' has the wrong width");
        }
        std::size_t s = 0;
        for (char ch : label) {
            if (ch != '0' && ch != '1') {
                throw ParseError("histogram state '" + label + "' is not a bit string");
            }
            s = (s << 1) | (ch == '1' ? 1U : 0U);
        }
        out.counts[s] = io::count_field(row, "count", "histogram");
    }
    return out;
}

std::string emit_distribution(std::span<const double> probabilities, std::size_t bits, const EmitOptions &options,
                              const io::Json &metadata) {
    if (bits == 0 || bits > 16 || probabilities.size() != (std::size_t{1} << bits)) {
        throw InvalidArgument("distribution size does not match its bit width");
    }
    std::vector<double> p(probabilities.begin(), probabilities.end());
    if (options.canonical) {
        const std::size_t top = std::size_t{1} << (bits - 1);
        std::vector<double> folded(p.size(), 0.0);
        for (std::size_t s = 0; s < p.size(); ++s) {
            folded[(s & top) ? s : complement(s, bits)] += p[s];
        }
        p = std::move(folded);
    }
    if (options.format == Format::kJson) {
        io::Json rows = io::Json::array();
        for (std::size_t s = 0; s < p.size(); ++s) {
            if (p[s] == 0.0 && !options.dense) {
                continue;
            }
            rows.push_back({{"state", state_label(s, bits)}, {"probability", std::stod(format_probability(p[s]))}});
        }
        io::Json doc{{"metadata", metadata}, {"bits", bits}, {"distribution", rows}};
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    os << csv_metadata_block(metadata);
    os << "state,probability\n";
    for (std::size_t s = 0; s < p.size(); ++s) {
        if (p[s] == 0.0 && !options.dense) {
            continue;
        }
        os << state_label(s, bits) << ',' << format_probability(p[s]) << '\n';
    }
    return os.str();
}

}  // namespace jpoim::report
