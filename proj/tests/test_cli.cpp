// Copyright 2026 The entsphere Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "entsphere/commands.hpp"
#include "entsphere/io.hpp"
#include "entsphere/verify.hpp"
#include "support.hpp"

namespace entsphere::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "entsphere");
    std::vector<const char *> argv;
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("entsphere_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
        io::write_state_document(path("skewed.json"), io::to_document(testing::skewed_state(), "skewed"));
        io::write_state_document(path("singlet.json"), io::to_document(TwoQubitState::singlet()));
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

TEST_F(CliTest, Schmidt) {
    const Outcome o = invoke({"schmidt", path("skewed.json")});
    EXPECT_EQ(o.code, kExitOk);
    EXPECT_NE(o.out.find("r: 0.28000000000000"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("coefficients: 0.8"), std::string::npos) << o.out;
}

TEST_F(CliTest, CollapseProbabilities) {
    const Outcome o = invoke({"collapse", path("skewed.json"), "--theta", "0"});
    EXPECT_EQ(o.code, kExitOk);
    EXPECT_NE(o.out.find("probability: 0.3599999999999999"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("probability: 0.640000000000000"), std::string::npos) << o.out;
}

TEST_F(CliTest, CollapseInDegrees) {
    const Outcome rad = invoke({"collapse", path("singlet.json"), "--theta", "1.5707963267948966", "--side", "2"});
    const Outcome deg = invoke({"--degrees", "collapse", path("singlet.json"), "--theta", "90", "--side", "2"});
    EXPECT_EQ(rad.code, kExitOk);
    EXPECT_EQ(deg.code, kExitOk);
    EXPECT_NE(deg.out.find("probability: 0.5"), std::string::npos) << deg.out;
}

TEST_F(CliTest, ImpossibleOutcomeReported) {
    io::write_state_document(path("up.json"), io::to_document(TwoQubitState::product(testing::ket0(), testing::ket0())));
    const Outcome o = invoke({"collapse", path("up.json"), "--theta", "0"});
    EXPECT_EQ(o.code, kExitOk);
    EXPECT_NE(o.out.find("impossible"), std::string::npos) << o.out;
}

TEST_F(CliTest, Luder) {
    const Outcome o = invoke({"luder", path("skewed.json"), "--theta", "1.0471975511965976", "--phi", "0.6283185307179586"});
    EXPECT_EQ(o.code, kExitOk);
    EXPECT_NE(o.out.find("remote_delta:"), std::string::npos);
    EXPECT_NE(o.out.find("density_after:"), std::string::npos);
}

TEST_F(CliTest, SpheremapWritesParsableGrid) {
    const Outcome o = invoke({"spheremap", path("skewed.json"), "--ntheta", "7", "--nphi", "4", "--out", path("g.csv")});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    EXPECT_NE(o.out.find("rows: 28"), std::string::npos);
    std::ifstream in(path("g.csv"));
    const auto rows = io::parse_grid(in);
    ASSERT_EQ(rows.size(), 28u);
    for (const auto &row : rows) {
        const double c = std::cos(row.theta1);
        EXPECT_NEAR(row.norm2, (1 + 0.28 * c) / 2, 1e-9);
        EXPECT_NEAR(row.axis_projection, (0.28 + c) / (1 + 0.28 * c), 1e-9);
    }
}

TEST_F(CliTest, InputErrorsExitTwo) {
    EXPECT_EQ(invoke({}).code, kExitInputError);
    EXPECT_EQ(invoke({"bogus"}).code, kExitInputError);
    EXPECT_EQ(invoke({"schmidt", path("missing.json")}).code, kExitInputError);
    EXPECT_EQ(invoke({"collapse", path("skewed.json")}).code, kExitInputError);
    EXPECT_EQ(invoke({"collapse", path("skewed.json"), "--theta", "9"}).code, kExitInputError);
    EXPECT_EQ(invoke({"collapse", path("skewed.json"), "--theta", "0", "--side", "3"}).code, kExitInputError);
    EXPECT_EQ(invoke({"spheremap", path("skewed.json"), "--ntheta", "1", "--out", path("x.csv")}).code,
              kExitInputError);
    EXPECT_EQ(invoke({"--frame", "sideways", "schmidt", path("skewed.json")}).code, kExitInputError);
    EXPECT_EQ(invoke({"--tolerance", "-1", "schmidt", path("skewed.json")}).code, kExitInputError);

    std::ofstream(path("bad.json")) << R"({"amplitudes": [[1, 0], [0, 0], [0, "y"], [0, 0]]})";
    const Outcome bad = invoke({"schmidt", path("bad.json")});
    EXPECT_EQ(bad.code, kExitInputError);
    EXPECT_NE(bad.err.find("amplitudes[2][1]"), std::string::npos) << bad.err;

    std::ofstream(path("long.json")) << R"({"amplitudes": [[1, 0], [0, 0], [0, 0], [1, 0]]})";
    EXPECT_EQ(invoke({"schmidt", path("long.json")}).code, kExitInputError);
    EXPECT_EQ(invoke({"--normalize", "schmidt", path("long.json")}).code, kExitOk);
}

TEST_F(CliTest, HelpExitsZero) {
    const Outcome o = invoke({"--help"});
    EXPECT_EQ(o.code, kExitOk);
    EXPECT_NE(o.out.find("spheremap"), std::string::npos);
}

TEST(CliVerify, PassesOnAcceptanceSeed) {
    const Outcome o = invoke({"verify", "--cases", "200"});
    EXPECT_EQ(o.code, kExitOk) << o.out;
    EXPECT_NE(o.out.find("suites passed"), std::string::npos);
}

TEST(CliVerify, InjectedFaultExitsOne) {
    const Outcome o = invoke({"verify", "--cases", "20", "--self-test-fault", "entangle.schmidt_soundness"});
    EXPECT_EQ(o.code, kExitVerificationFailed);
    EXPECT_NE(o.out.find("[FAIL] entangle.schmidt_soundness"), std::string::npos) << o.out;
    EXPECT_NE(o.out.find("1 of"), std::string::npos);
}

TEST(CliVerify, UnknownFaultNameIsInputError) {
    EXPECT_EQ(invoke({"verify", "--self-test-fault", "no_such_suite"}).code, kExitInputError);
}

}  // namespace
}  // namespace entsphere::cli

namespace entsphere::verify {
namespace {

TEST(Harness, EverySuitePasses) {
    const auto reports = run_suites(Options{kAcceptanceSeed, 100, std::nullopt});
    EXPECT_EQ(reports.size(), default_suites().size());
    for (const auto &r : reports) EXPECT_TRUE(r.passed()) << r.name << ": " << r.counterexample.value_or("");
}

// A suite built on a deliberately broken Schmidt parameter must be caught,
// with the offending case reported.
TEST(Harness, DetectsMutatedImplementation) {
    Suite mutated{"mutated_schmidt", [](SuiteContext &ctx) {
                      Tally t("mutated_schmidt", kEigenTolerance, ctx.faulted);
                      for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
                          const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
                          const double broken = schmidt_decompose(psi).r + 1e-6;
                          t.record(std::abs(broken - oracle::brute_force_schmidt(psi).r), [&] { return describe(psi); });
                      }
                      return t.finish();
                  }};
    const auto reports = run_suites(Options{1, 10, std::nullopt}, {mutated});
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_FALSE(reports[0].passed());
    EXPECT_NE(reports[0].counterexample->find("residual="), std::string::npos);
    EXPECT_FALSE(all_passed(reports));
}

TEST(Harness, NanResidualFails) {
    Tally t("nan", 1.0);
    t.record(std::nan(""), [] { return "x"; });
    t.next_case();
    EXPECT_FALSE(t.finish().passed());
}

TEST(Harness, ReproducibleReports) {
    const auto a = run_suites(Options{5, 30, std::nullopt});
    const auto b = run_suites(Options{5, 30, std::nullopt});
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].worst_residual, b[i].worst_residual) << a[i].name;
}

TEST(Harness, StateWithParameter) {
    oracle::RandomSource rng(9);
    for (double r : {0.0, 0.3, 1.0}) EXPECT_NEAR(schmidt_decompose(state_with_parameter(r, rng)).r, r, 1e-9);
}

}  // namespace
}  // namespace entsphere::verify
