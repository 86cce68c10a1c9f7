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

#include "jpoim/problem_io.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "jpoim/errors.h"

namespace jpoim::io {

namespace {

std::string label(std::string_view where, std::string_view key) {
    std::string out(where);
    if (!out.empty()) {
        out += '.';
    }
    out += key;
    return out;
}

[[noreturn]] void field_error(std::string_view field, std::string_view what) {
    throw ParseError("field '" + std::string(field) + "': " + std::string(what));
}

double as_number(const Json &v, std::string_view field) {
    if (!v.is_number()) {
        field_error(field, "expected a number, got " + std::string(v.type_name()));
    }
    double d = v.get<double>();
    if (!std::isfinite(d)) {
        field_error(field, "value is not finite");
    }
    return d;
}

std::size_t as_index(const Json &v, std::string_view field, std::size_t n) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        field_error(field, "expected a non-negative integer index");
    }
    auto i = v.get<std::size_t>();
    if (i >= n) {
        field_error(field, "index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
    }
    return i;
}

const Json &require(const Json &obj, const char *key, std::string_view where) {
    if (!obj.is_object()) {
        field_error(where.empty() ? std::string_view("<root>") : where, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        field_error(label(where, key), "missing required field");
    }
    return *it;
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error &e) {
        throw ParseError(std::string(source) + ": " + e.what());
    }
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

double number_field(const Json &obj, const char *key, std::string_view where) {
    return as_number(require(obj, key, where), label(where, key));
}

std::optional<double> optional_number(const Json &obj, const char *key, std::string_view where) {
    if (!obj.is_object() || !obj.contains(key)) {
        return std::nullopt;
    }
    return as_number(obj.at(key), label(where, key));
}

std::uint64_t count_field(const Json &obj, const char *key, std::string_view where) {
    const Json &v = require(obj, key, where);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        field_error(label(where, key), "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

std::optional<std::uint64_t> optional_count(const Json &obj, const char *key, std::string_view where) {
    if (!obj.is_object() || !obj.contains(key)) {
        return std::nullopt;
    }
    return count_field(obj, key, where);
}

std::vector<double> number_array(const Json &obj, const char *key, std::string_view where) {
    const Json &v = require(obj, key, where);
    const std::string field = label(where, key);
    if (!v.is_array()) {
        field_error(field, "expected an array");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(as_number(v[i], field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

IsingProblem parse_ising_problem(std::string_view text, std::string_view source) {
    const Json doc = parse_json(text, source);
    const std::string where(source);
    if (!doc.is_object()) {
        throw ParseError(where + ": expected an object with keys n, h, J");
    }
    const std::size_t n = count_field(doc, "n", "");
    if (n == 0) {
        field_error("n", "must be at least 1");
    }

    std::vector<double> h(n, 0.0);
    if (doc.contains("h")) {
        h = number_array(doc, "h", "");
        if (h.size() != n) {
            field_error("h", "has " + std::to_string(h.size()) + " entries, expected n=" + std::to_string(n));
        }
    }

    std::vector<double> j(n * n, 0.0);
    const Json &jv = require(doc, "J", "");
    if (!jv.is_array()) {
        field_error("J", "expected an array");
    }
    const bool sparse = !jv.empty() && jv[0].is_array();
    if (sparse) {
        std::vector<bool> seen(n * n, false);
        for (std::size_t t = 0; t < jv.size(); ++t) {
            const std::string f = "J[" + std::to_string(t) + "]";
            const Json &triple = jv[t];
            if (!triple.is_array() || triple.size() != 3) {
                field_error(f, "expected a [i, j, value] triple");
            }
            const std::size_t a = as_index(triple[0], f + "[0]", n);
            const std::size_t b = as_index(triple[1], f + "[1]", n);
            const double value = as_number(triple[2], f + "[2]");
            if (a == b) {
                field_error(f, "diagonal couplings are not allowed");
            }
            if (seen[a * n + b]) {
                field_error(f, "duplicate entry for pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
            }
            seen[a * n + b] = seen[b * n + a] = true;
            j[a * n + b] = value;
            j[b * n + a] = value;
        }
    } else {
        j = number_array(doc, "J", "");
        if (j.size() != n * n) {
            field_error("J", "dense form needs n*n=" + std::to_string(n * n) + " entries, got " +
                                 std::to_string(j.size()));
        }
    }
    try {
        return IsingProblem(std::move(h), std::move(j));
    } catch (const InvalidArgument &e) {
        throw ParseError(where + ": field 'J': " + e.what());
    }
}

IsingProblem load_ising_problem(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidArgument("cannot open problem file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ising_problem(buf.str(), path);
}

Json ising_problem_to_json(const IsingProblem &problem) {
    Json out;
    out["n"] = problem.size();
    out["h"] = std::vector<double>(problem.fields().begin(), problem.fields().end());
    out["J"] = std::vector<double>(problem.couplings().begin(), problem.couplings().end());
    return out;
}

}  // namespace jpoim::io
