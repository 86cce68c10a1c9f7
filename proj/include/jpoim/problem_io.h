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

#ifndef JPOIM_PROBLEM_IO_H
#define JPOIM_PROBLEM_IO_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "jpoim/spin_core.h"

namespace jpoim::io {

using Json = nlohmann::json;

/// Parses structured text (JSON). Syntax errors are raised as ParseError
/// naming `source` and the line/column reported by the parser.
Json parse_json(std::string_view text, std::string_view source);
Json read_json_file(const std::string &path);

// Field accessors. `where` labels the enclosing object in error messages.
double number_field(const Json &obj, const char *key, std::string_view where);
std::optional<double> optional_number(const Json &obj, const char *key, std::string_view where);
std::uint64_t count_field(const Json &obj, const char *key, std::string_view where);
std::optional<std::uint64_t> optional_count(const Json &obj, const char *key, std::string_view where);
std::vector<double> number_array(const Json &obj, const char *key, std::string_view where);

/// Ising problem file:
///   {"n": 3, "h": [0, 0, 0], "J": [0, 1, 0,  1, 0, 2,  0, 2, 0]}
/// J is either a flat row-major n*n array or a list of sparse [i, j, value]
/// triples with 0-based indices (the mirrored entry is filled in). `h` may be
/// omitted for a pure coupling problem.
IsingProblem parse_ising_problem(std::string_view text, std::string_view source = "<problem>");
IsingProblem load_ising_problem(const std::string &path);

Json ising_problem_to_json(const IsingProblem &problem);

}  // namespace jpoim::io

#endif  // JPOIM_PROBLEM_IO_H
