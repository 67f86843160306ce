// Copyright 2026 The gradload Authors
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

#include "gradload/cli.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "gradload/statesim.h"
#include "gradload/sweep.h"

namespace gradload {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::vector<std::string> cells(const std::string &line) {
    std::vector<std::string> v;
    std::istringstream in(line);
    for (std::string c; std::getline(in, c, ',');) v.push_back(c);
    return v;
}

TEST(Quantize, WritesBitRows) {
    auto r = run({"quantize", "--dist", "triangle", "--n", "8", "--g", "4"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["n"], 8);
    EXPECT_EQ(j["g"], 4);
    ASSERT_EQ(j["bits"].size(), 8u);
    for (const auto &row : j["bits"]) EXPECT_EQ(row.size(), 4u);

    auto d = nlohmann::json::parse(run({"quantize", "--dist", "delta", "--n", "4", "--g", "2"}).out);
    EXPECT_EQ(d["bits"][0], (std::vector<int>{1, 1}));
    EXPECT_EQ(d["bits"][1], (std::vector<int>{0, 0}));
}

TEST(Quantize, ValidationExit) {
    EXPECT_EQ(run({"quantize", "--dist", "powerlaw", "--n", "0", "--k", "1"}).code, kExitValidation);
    EXPECT_EQ(run({"quantize", "--dist", "nope", "--n", "4"}).code, kExitValidation);
    EXPECT_EQ(run({"quantize"}).code, kExitValidation);
    EXPECT_EQ(run({"quantize", "--bogus"}).code, kExitValidation);
    EXPECT_EQ(run({}).code, kExitValidation);
}

TEST(Quantize, InputRoundTrip) {
    auto first = run({"quantize", "--dist", "random", "--n", "16", "--g", "6", "--seed", "4"});
    ASSERT_EQ(first.code, kExitOk);
    std::string path = testing::TempDir() + "gradload_cli_amps.json";
    {
        FILE *f = std::fopen(path.c_str(), "w");
        ASSERT_NE(f, nullptr);
        std::fputs(first.out.c_str(), f);
        std::fclose(f);
    }
    auto second = run({"quantize", "--input", path});
    ASSERT_EQ(second.code, kExitOk) << second.err;
    EXPECT_EQ(nlohmann::json::parse(second.out)["bits"], nlohmann::json::parse(first.out)["bits"]);
    std::remove(path.c_str());
}

TEST(Simulate, UniformBootstrap) {
    auto r = run({"simulate", "--dist", "uniform", "--n", "16", "--g", "8", "--bootstrap"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["final_fidelity"].get<double>(), 1.0, 1e-9);
    EXPECT_TRUE(j["bounds"]["valid"].get<bool>());
}

TEST(Simulate, DeltaCoreRounds) {
    auto r = run({"simulate", "--dist", "delta", "--n", "16", "--g", "8"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["L_core"], 4);
}

TEST(Simulate, Deterministic) {
    std::vector<std::string> a{"simulate", "--dist", "random", "--n", "32", "--seed", "9", "--mode", "postselect"};
    EXPECT_EQ(run(a).out, run(a).out);
}

TEST(Simulate, InvalidBoundExit) {
    auto r = run({"simulate", "--dist", "delta", "--n", "64", "--g", "4"});
    EXPECT_EQ(r.code, kExitBoundInvalid);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["bounds"]["valid"].get<bool>());
    EXPECT_TRUE(j["bounds"]["L_bound"].is_null());
    EXPECT_FALSE(r.err.empty());
}

TEST(Simulate, BadMode) {
    EXPECT_EQ(run({"simulate", "--dist", "uniform", "--n", "4", "--mode", "guess"}).code, kExitValidation);
}

TEST(Sweep, HeaderAndRows) {
    auto r = run({"sweep", "--family", "delta,uniform", "--n", "64,256", "--threads", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 5u);
    EXPECT_EQ(ls[0], std::string(kSweepColumns));
    const std::size_t ncol = cells(ls[0]).size();
    for (std::size_t i = 1; i < ls.size(); i++) EXPECT_EQ(cells(ls[i]).size() + (ls[i].back() == ',' ? 1 : 0), ncol);
    auto c = cells(ls[1]);
    EXPECT_EQ(c[0], "delta");
    EXPECT_EQ(c[2], "64");
    EXPECT_EQ(c[11], "8");
}

TEST(Sweep, ParameterFamilies) {
    auto r = run({"sweep", "--family", "powerlaw", "--param", "0.5,2", "--n", "100", "--threads", "1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_EQ(cells(ls[1])[0], "powerlaw");
    EXPECT_EQ(run({"sweep", "--family", "normal", "--n", "100"}).code, kExitValidation);
}

TEST(Estimate, ProfileJson) {
    auto r = run({"estimate", "--dist", "uniform", "--n", "8", "--g", "3", "--shots", "64"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["source"], "sampled");
    EXPECT_EQ(j["raw_frequencies"].size(), 3u);
}

TEST(Resources, Table) {
    auto r = run({"resources", "--g", "32"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("g=32"), std::string::npos);
    EXPECT_NE(r.out.find("sanders_v2"), std::string::npos);

    auto j = nlohmann::json::parse(run({"resources", "--g", "32", "--json"}).out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["g"], 32);
    EXPECT_EQ(j[0]["variants"].size(), 4u);
    EXPECT_EQ(run({"resources", "--g", "12"}).code, kExitValidation);
}

TEST(CircuitDump, PermutationRoundTrip) {
    auto r = run({"circuit", "--what", "permutation", "--q", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    Circuit c = Circuit::parse(r.out);
    EXPECT_EQ(c.dump(), r.out);
    StateVector in = StateVector::basis({std::size_t{1} << c.num_wires()}, {1});
    EXPECT_NEAR(simulate_circuit(c, in).norm(), 1.0, 1e-12);
}

TEST(CircuitDump, GradientHasSqrtGates) {
    auto r = run({"circuit", "--what", "gradient", "--g", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::size_t count = 0;
    for (const auto &l : lines(r.out))
        if (l.rfind("SQRT_CNOT", 0) == 0) count++;
    EXPECT_EQ(count, 3u);
    EXPECT_EQ(run({"circuit", "--what", "gradient"}).code, kExitValidation);
    EXPECT_EQ(run({"circuit", "--what", "teleport"}).code, kExitValidation);
}

TEST(Binary, Smoke) {
    std::string cmd = std::string(GRADLOAD_CLI_PATH) + " resources --g 4 > /dev/null 2>&1";
    EXPECT_EQ(std::system(cmd.c_str()), 0);
    std::string bad = std::string(GRADLOAD_CLI_PATH) + " quantize --dist delta --n 0 > /dev/null 2>&1";
    int status = std::system(bad.c_str());
    EXPECT_EQ(WEXITSTATUS(status), kExitValidation);
}

}  // namespace
}  // namespace gradload
