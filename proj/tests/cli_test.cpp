// Copyright 2026 The qgxor Authors
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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli/commands.hpp"
#include "cli/report.hpp"
#include "qgxor/errors.hpp"
#include "test_support.hpp"

namespace qgxor::cli {
namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
    const auto result = run_cli(std::move(args));
    EXPECT_EQ(result.code, kExitOk) << result.err;
    return Json::parse(result.out);
}

Complex amp(const Json& z) { return {z.at("re").get<double>(), z.at("im").get<double>()}; }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qgxor_cli_test_" + name);
}

TEST(CliBell, D3ContainsFormulaStates) {
    const Json doc = run_json({"bell", "--dim", "3"});
    const auto& states = doc.at("data").at("states");
    ASSERT_EQ(states.size(), 9u);
    for (const auto& s : states) {
        const int l = s.at("l").get<int>();
        const int m = s.at("m").get<int>();
        const CVector expected = testing::bell_formula(l, m, 3);
        ASSERT_EQ(s.at("amplitudes").size(), 9u);
        for (int idx = 0; idx < 9; ++idx) {
            EXPECT_LT(std::abs(amp(s.at("amplitudes")[static_cast<std::size_t>(idx)]) - expected(idx)), 1e-12)
                << "psi_" << l << m << " entry " << idx;
        }
    }
    EXPECT_LT(doc.at("data").at("gram_max_offdiag_residual").get<double>(), 1e-12);
}

TEST(CliBell, D3SupportOfPsi00AndPsi01) {
    const Json doc = run_json({"bell", "--dim", "3"});
    const auto& states = doc.at("data").at("states");
    EXPECT_EQ(states[0].at("support"), Json({"0,0", "1,1", "2,2"}));
    EXPECT_EQ(states[1].at("support"), Json({"0,2", "1,0", "2,1"}));
}

TEST(CliBell, D2GivesFourQubitBellStates) {
    const Json doc = run_json({"bell", "--dim", "2"});
    const auto& states = doc.at("data").at("states");
    ASSERT_EQ(states.size(), 4u);
    const double r = 1.0 / std::sqrt(2.0);
    // psi_00 = (|00> + |11>)/sqrt2, psi_10 = (|00> - |11>)/sqrt2
    EXPECT_NEAR(amp(states[0].at("amplitudes")[0]).real(), r, 1e-12);
    EXPECT_NEAR(amp(states[0].at("amplitudes")[3]).real(), r, 1e-12);
    EXPECT_NEAR(amp(states[2].at("amplitudes")[0]).real(), r, 1e-12);
    EXPECT_NEAR(amp(states[2].at("amplitudes")[3]).real(), -r, 1e-12);
    EXPECT_EQ(states[1].at("support"), Json({"0,1", "1,0"}));
    EXPECT_EQ(states[3].at("support"), Json({"0,1", "1,0"}));
}

TEST(CliTeleport, ClassicalBitsForD4) {
    const Json doc = run_json({"teleport", "--dim", "4", "--trials", "20", "--seed", "7"});
    EXPECT_EQ(doc.at("data").at("classical_bits").get<double>(), 4.0);
    EXPECT_GT(doc.at("data").at("min_fidelity").get<double>(), 1.0 - 1e-10);
    EXPECT_EQ(doc.at("meta").at("seed").get<std::uint64_t>(), 7u);
    EXPECT_EQ(doc.at("data").at("outcome_histogram").size(), 16u);
}

TEST(CliTeleport, RerunIsIdenticalInPayload) {
    const std::vector<std::string> args{"teleport", "--dim", "3", "--trials", "50", "--seed", "12345"};
    const Json a = run_json(args);
    const Json b = run_json(args);
    EXPECT_EQ(a.at("data"), b.at("data"));
    EXPECT_EQ(a.at("meta").at("config"), b.at("meta").at("config"));
    EXPECT_EQ(a.at("data").dump(), b.at("data").dump());
}

TEST(CliTeleport, DifferentSeedsDiffer) {
    const Json a = run_json({"teleport", "--dim", "3", "--trials", "50", "--seed", "1"});
    const Json b = run_json({"teleport", "--dim", "3", "--trials", "50", "--seed", "2"});
    EXPECT_NE(a.at("data").at("trial_records"), b.at("data").at("trial_records"));
}

TEST(CliPurify, ConvergesForD3Lambda06) {
    const Json doc = run_json({"purify", "--dim", "3", "--lambda", "0.6"});
    EXPECT_TRUE(doc.at("data").at("converged").get<bool>());
    EXPECT_EQ(doc.at("data").at("iterations_used").get<int>(), 6);
    EXPECT_EQ(doc.at("data").at("trace").size(), 7u);
}

TEST(CliPurify, LambdaOneIsZeroIterations) {
    const Json doc = run_json({"purify", "--dim", "3", "--lambda", "1"});
    EXPECT_TRUE(doc.at("data").at("converged").get<bool>());
    EXPECT_EQ(doc.at("data").at("iterations_used").get<int>(), 0);
    EXPECT_EQ(doc.at("data").at("trace").size(), 1u);
}

TEST(CliPurify, NonConvergenceExitsZero) {
    const auto result = run_cli({"purify", "--dim", "3", "--lambda", "0.05", "--max-iters", "60"});
    ASSERT_EQ(result.code, kExitOk) << result.err;
    const Json doc = Json::parse(result.out);
    EXPECT_FALSE(doc.at("data").at("converged").get<bool>());
    EXPECT_FALSE(doc.at("data").at("entangled").get<bool>());
}

TEST(CliPurify, CsvHasTraceRows) {
    const auto result = run_cli({"purify", "--dim", "2", "--lambda", "0.9", "--format", "csv"});
    ASSERT_EQ(result.code, kExitOk);
    std::istringstream lines(result.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "iteration,fidelity,step_success_prob,cumulative_success_prob\r");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    EXPECT_EQ(rows, 5);  // row 0 plus 4 iterations
}

TEST(CliSweep, ThresholdPlusOffsetConvergesEverywhere) {
    const Json doc = run_json({"sweep", "--dim", "2..20", "--lambda-offset", "0.05", "--threads", "4"});
    EXPECT_TRUE(doc.at("data").at("all_converged").get<bool>());
    EXPECT_EQ(doc.at("data").at("rows").size(), 19u);
}

TEST(CliSweep, EmptyIntersectionIsInvalid) {
    const auto result = run_cli({"sweep", "--dim", "2..5", "--lambda", "0.1", "--entangled-only"});
    EXPECT_EQ(result.code, kExitInvalidConfig);
    EXPECT_TRUE(result.out.empty());
    EXPECT_FALSE(result.err.empty());
}

TEST(CliSweep, ThreadCountDoesNotChangePayload) {
    const Json a = run_json({"sweep", "--dim", "2..6", "--lambda", "0.5,0.8", "--threads", "1"});
    const Json b = run_json({"sweep", "--dim", "2..6", "--lambda", "0.5,0.8", "--threads", "3"});
    EXPECT_EQ(a.at("data"), b.at("data"));
}

TEST(CliKerr, ResidualsBelowTolerance) {
    const Json doc = run_json({"kerr-check", "--dim", "2..8"});
    const auto& rows = doc.at("data").at("rows");
    ASSERT_EQ(rows.size(), 7u);
    for (const auto& row : rows) EXPECT_LT(row.at("max_residual").get<double>(), 1e-10) << row.dump();
    EXPECT_LT(rows[0].at("max_residual").get<double>(), 1e-14);
    EXPECT_TRUE(doc.at("data").contains("phase_convention"));
}

TEST(CliExitCodes, InvalidInputs) {
    EXPECT_EQ(run_cli({}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"nope"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"bell", "--dim", "1"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"bell", "--dim", "x"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"bell", "--format", "xml"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"teleport", "--trials", "0"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"purify", "--lambda", "1.5"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"purify", "--target", "0"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"purify", "--schedule", "hadamard"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"sweep", "--dim", "5..2", "--lambda", "0.5"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"sweep", "--dim", "2..4"}).code, kExitInvalidConfig);
    EXPECT_EQ(run_cli({"kerr-check", "--chi", "-1"}).code, kExitInvalidConfig);
}

TEST(CliExitCodes, CapacityGuard) {
    const auto result = run_cli({"purify", "--dim", "500"});
    EXPECT_EQ(result.code, kExitCapacity);
    EXPECT_TRUE(result.out.empty());
}

TEST(CliExitCodes, HelpIsSuccess) { EXPECT_EQ(run_cli({"--help"}).code, kExitOk); }

TEST(CliOutput, InvalidRunWritesNoFile) {
    const auto path = temp_path("invalid.json");
    std::filesystem::remove(path);
    EXPECT_EQ(run_cli({"bell", "--dim", "0", "--out", path.string()}).code, kExitInvalidConfig);
    EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(CliOutput, OutPathReceivesReport) {
    const auto path = temp_path("bell.json");
    const auto result = run_cli({"bell", "--dim", "2", "--out", path.string()});
    ASSERT_EQ(result.code, kExitOk);
    EXPECT_TRUE(result.out.empty());
    std::ifstream file(path);
    const Json doc = Json::parse(file);
    EXPECT_EQ(doc.at("meta").at("command"), "bell");
    std::filesystem::remove(path);
}

TEST(CliConfig, FlagsOverrideFile) {
    const auto path = temp_path("config.toml");
    {
        std::ofstream file(path);
        file << "[purify]\ndim = 4\nlambda = 0.9\nmax-iters = 40\n";
    }
    const Json doc = run_json({"--config", path.string(), "purify", "--lambda", "0.8"});
    const auto& config = doc.at("meta").at("config");
    EXPECT_EQ(config.at("dim").get<int>(), 4);
    EXPECT_DOUBLE_EQ(config.at("lambda").get<double>(), 0.8);
    EXPECT_EQ(config.at("max_iters").get<int>(), 40);
    EXPECT_EQ(config.at("target").get<double>(), 0.999);
    std::filesystem::remove(path);
}

TEST(Report, JsonRoundTrip) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"bell", "--dim", "3"},
             {"teleport", "--dim", "3", "--trials", "10", "--seed", "99"},
             {"purify", "--dim", "3", "--lambda", "0.6"},
             {"kerr-check", "--dim", "2..4"}}) {
        const Json doc = run_json(args);
        const RunReport report = report_from_json(doc);
        std::ostringstream again;
        emit(again, report, Format::Json);
        EXPECT_EQ(Json::parse(again.str()), doc) << args[0];
    }
}

TEST(Report, StructRoundTrip) {
    RunReport report = cmd_purify(PurifyRunConfig{});
    report.table = {};
    std::ostringstream out;
    emit(out, report, Format::Json);
    EXPECT_EQ(report_from_json(Json::parse(out.str())), report);

    RunReport seeded = cmd_teleport(TeleportConfig{.dim = 2, .trials = 3, .seed = 5});
    seeded.table = {};
    EXPECT_EQ(report_from_json(report_to_json(seeded)), seeded);
}

TEST(Report, CsvEscaping) {
    EXPECT_EQ(csv_escape("plain"), "plain");
    EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_escape("two\nlines"), "\"two\nlines\"");
    EXPECT_EQ(csv_escape(""), "");

    std::ostringstream out;
    write_csv(out, CsvTable{{"ket", "value"}, {{"0,1", "x"}}});
    EXPECT_EQ(out.str(), "ket,value\r\n\"0,1\",x\r\n");
}

TEST(Report, FormatDoubleRoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.9461325966850823}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

TEST(DimList, Parsing) {
    EXPECT_EQ(parse_dim_list("3"), std::vector<int>{3});
    EXPECT_EQ(parse_dim_list("2,3,5"), (std::vector<int>{2, 3, 5}));
    EXPECT_EQ(parse_dim_list("2..4"), (std::vector<int>{2, 3, 4}));
    EXPECT_THROW((void)parse_dim_list("4..2"), InvalidArgument);
    EXPECT_THROW((void)parse_dim_list("2;3"), InvalidArgument);
    EXPECT_THROW((void)parse_dim_list(""), InvalidArgument);
}

}  // namespace
}  // namespace qgxor::cli
