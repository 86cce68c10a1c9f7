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

#ifndef JPOIM_TOOLS_CLI_H
#define JPOIM_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace jpoim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Environment variable naming a directory that relative --out paths are
/// resolved against.
inline constexpr const char *kOutputDirEnv = "JPOIM_OUTPUT_DIR";

/// Runs one command line (args excludes the program name). Data goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace jpoim::cli

#endif  // JPOIM_TOOLS_CLI_H
