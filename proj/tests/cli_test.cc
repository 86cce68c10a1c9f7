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

#include "cli.h"

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "jpoim/problem_io.h"

namespace jpoim::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string config(const std::string &name) {
    return std::string(JPOIM_SOURCE_DIR) + "/configs/" + name;
}

std::size_t data_rows(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    std::size_t rows = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        ++rows;
    }
    return rows;
}

TEST(CliTest, TileEnumerateEmitsAllConfigurations) {
    const Outcome r = invoke({"tile", "enumerate", "--params", config("reference_tile.json")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("s1,s2,s3,s4,a1,a2,energy,parity"), std::string::npos);
    EXPECT_EQ(data_rows(r.out), 64u);
}

TEST(CliTest, UsageErrorsExitOne) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"nonsense"}).code, kExitUsage);
    EXPECT_EQ(invoke({"tile", "enumerate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"anneal", "--program", config("even_parity.json"), "--format", "xml"}).code, kExitUsage);
    const Outcome missing = invoke({"tile", "enumerate", "--params", "/no/such/file.json"});
    EXPECT_EQ(missing.code, kExitUsage);
    EXPECT_FALSE(missing.err.empty());
}

TEST(CliTest, HelpExitsZero) {
    const Outcome r = invoke({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("anneal"), std::string::npos);
}

TEST(CliTest, ValidationErrorsExitTwo) {
    const Outcome zero = invoke({"anneal", "--program", config("even_parity.json"), "--trials", "0", "--seed", "1"});
    EXPECT_EQ(zero.code, kExitValidation);
    EXPECT_NE(zero.err.find("trials"), std::string::npos);
    EXPECT_EQ(invoke({"lhz", "map", "--n", "2"}).code, kExitValidation);
    EXPECT_EQ(invoke({"lhz", "map", "--n", "4", "--problem", config("triangle_problem.json")}).code,
              kExitValidation);
    EXPECT_EQ(invoke({"anneal", "--program", config("circuit.json"), "--trials", "1", "--seed", "1"}).code,
              kExitValidation);
}

TEST(CliTest, AnnealIsReproducibleAcrossWorkerCounts) {
    const std::vector<std::string> base = {"anneal", "--program", config("alternating.json"), "--trials", "200",
                                           "--seed", "42", "--quiet"};
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto many = base;
    many.insert(many.end(), {"--workers", "8"});
    const Outcome a = invoke(one);
    const Outcome b = invoke(many);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("# unsettled=0"), std::string::npos);
}

TEST(CliTest, MissingSeedIsReported) {
    const Outcome r = invoke({"circuit", "iv", "--quiet"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("seed: "), std::string::npos);
}

TEST(CliTest, JsonOutputParses) {
    const Outcome r = invoke({"tile", "quantum", "--params", config("quantum_sweep.json"), "--trials", "17", "--seed",
                              "3", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = io::Json::parse(r.out);
    EXPECT_EQ(doc.at("distribution").size(), 8u);
}

TEST(CliTest, OutFileIsWrittenUnderOutputDirectory) {
    const auto dir = std::filesystem::temp_directory_path() / "jpoim_cli_test";
    std::filesystem::remove_all(dir);
    ::setenv(kOutputDirEnv, dir.c_str(), 1);
    const Outcome r = invoke({"circuit", "sweep", "--out", "nested/sweep.csv", "--quiet"});
    ::unsetenv(kOutputDirEnv);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(dir / "nested" / "sweep.csv");
    std::stringstream content;
    content << in.rdbuf();
    EXPECT_EQ(data_rows(content.str()), 91u);
    for (const auto &entry : std::filesystem::directory_iterator(dir / "nested")) {
        EXPECT_EQ(entry.path().filename(), "sweep.csv");
    }
    std::filesystem::remove_all(dir);
}

TEST(CliTest, BinaryExitCodes) {
    const std::string bin = JPOIM_CLI_PATH;
    const auto status = [&](const std::string &args) {
        const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("tile enumerate --params " + config("parity_tile.json")), 0);
    EXPECT_EQ(status("tile enumerate"), 1);
    EXPECT_EQ(status("anneal --program " + config("even_parity.json") + " --trials 0 --seed 1"), 2);
}

}  // namespace
}  // namespace jpoim::cli
