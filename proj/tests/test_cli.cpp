// Copyright 2026 The seqbell Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "seqbell/io.hpp"

namespace {

struct Result {
    int status;
    std::string out;
};

Result run_env(const std::string &env, const std::string &args) {
    const std::string cmd = env + " " + std::string(SEQBELL_CLI) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    if (!p) return {-1, ""};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    const int raw = pclose(p);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Result run(const std::string &args) { return run_env("", args); }

TEST(Cli, CertifyChshInterval) {
    const auto r = run("certify chsh --observed 2.05,2.34");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["lambda_intervals"][0]["lower"].get<double>(), 0.724, 5e-3);
    EXPECT_NEAR(j["lambda_intervals"][0]["upper"].get<double>(), 0.755, 5e-3);
}

TEST(Cli, SimulateSharpSingleObserver) {
    const auto r = run("simulate chsh --lambdas 1");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["values"][0].get<double>(), 2.828427, 1e-6);
    const auto csv = run("simulate chsh --lambdas 0.8,1 --dim 4 --format csv");
    EXPECT_NE(csv.out.find("2,1.000000000,2.262741700"), std::string::npos) << csv.out;
}

TEST(Cli, ElegantCurveHasEqualAdvantagePoint) {
    const auto r = run("curve elegant --grid 101");
    ASSERT_EQ(r.status, 0);
    std::stringstream ss(r.out);
    const auto rows = seqbell::read_curve_csv(ss);
    ASSERT_EQ(rows.size(), 101u);
    // Grid row nearest to the equal-advantage point.
    const seqbell::CurveRow *best = &rows.front();
    for (const auto &row : rows) {
        if (std::abs(row.input_value - 5.291) < std::abs(best->input_value - 5.291)) best = &row;
    }
    EXPECT_NEAR(best->input_value, 5.291, 0.05);
    EXPECT_NEAR(best->value_2, 5.291, 0.05);
}

TEST(Cli, ThreeObserverCurve) {
    const auto r = run("curve elegant --grid 11 --observers 3");
    ASSERT_EQ(r.status, 0);
    std::stringstream ss(r.out);
    EXPECT_EQ(seqbell::read_curve_csv(ss).size(), 121u);
}

TEST(Cli, ElegantTriple) {
    const auto r = run("certify elegant --observed 4.462,4.462,4.462");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["consistent"].get<bool>());
    EXPECT_NEAR(j["lambda_estimates"][1]["value"].get<double>(), 0.763, 2e-3);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("simulate chsh").status, 2);
    EXPECT_EQ(run("simulate qutrit --lambdas 1").status, 2);
    EXPECT_EQ(run("simulate chsh --lambdas 1.5").status, 2);
    EXPECT_EQ(run("certify chsh --observed 1,2,3").status, 2);
    EXPECT_EQ(run("certify chsh --observed 3.5,1").status, 3);
    EXPECT_EQ(run("certify elegant --observed 6.5,5,1").status, 3);
}

TEST(Cli, VerifyIsDeterministicAndSeedable) {
    const auto a = run("verify --seed 5");
    const auto b = run_env("SEQBELL_SEED=5", "verify");
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(a.status == 0 || a.status == 4);
    std::stringstream ss(a.out);
    std::string line;
    int n = 0;
    while (std::getline(ss, line)) {
        const auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j["seed"].get<std::uint64_t>(), 5u);
        ++n;
    }
    EXPECT_GT(n, 100);
}

TEST(Cli, BadSeedEnvironment) { EXPECT_EQ(run_env("SEQBELL_SEED=abc", "verify").status, 2); }

}  // namespace
