// Copyright 2026 The critcausal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "../support/cli_matrix.hpp"

#include "cli.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace critcausal
{
namespace
{

using testing::run_cli;

std::filesystem::path scratch()
{
  const auto dir = std::filesystem::temp_directory_path() / "critcausal_cli_test";
  testing::write_metric_inputs(dir);
  return dir;
}

TEST(Cli, MatrixIsDeterministicAndClean)
{
  for (const auto & args : testing::cli_matrix(scratch())) {
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    EXPECT_EQ(a.code, 0) << args[3] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << args[3];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, IndicatorsJson)
{
  const auto r = run_cli(
    {"--format", "json", "indicators", "--reference", "fixture:heavy-rain-reality", "--candidate",
     "fixture:heavy-rain-model", "--set", "V1,V2,X", "--rho3", "restrict-to-N"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["conventions"]["kl_order"], "candidate||reference");
  std::map<std::string, double> pair;
  for (const auto & e : doc["indicators"]) {
    if (e["model"] == "pair") {
      pair[e["name"]] = e["value"].get<double>();
    }
  }
  EXPECT_NEAR(pair["rho2"], 0.0141, 1e-4);
  EXPECT_NEAR(pair["rho3"], 0.0190, 5e-4);
}

TEST(Cli, ThresholdBreachIsAFinding)
{
  const auto r = run_cli(
    {"indicators", "--reference", "fixture:heavy-rain-reality", "--candidate", "fixture:heavy-rain-model",
     "--set", "V1,V2,X", "--threshold", "rho2=0.001"});
  EXPECT_EQ(r.code, cli::kFinding);
  EXPECT_NE(r.out.find("rho2 above threshold"), std::string::npos);
}

TEST(Cli, EffectHuman)
{
  const auto r = run_cli({"effect", "fixture:heavy-rain-reality", "--do", "X=CP"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("E(phi | do(X=CP)) = 0.6"), std::string::npos) << r.out;
}

TEST(Cli, SafetyPrincipleReport)
{
  const auto r = run_cli({"--format", "json", "sp", "fixture:heavy-rain-reality", "--sp", "V2=Slow", "--report"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["delta_e_phi"].get<double>(), 0.2, 1e-12);
  EXPECT_NEAR(doc["e_phi_do"].get<double>(), 0.734, 1e-12);
  EXPECT_EQ(doc["delta_p_cp"], 0);
}

TEST(Cli, AdjustFrictionFindsTableSet)
{
  const auto r =
    run_cli({"--format", "json", "adjust", "fixture:friction-relation", "--minimal", "--max", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const std::vector<std::string> table{
    "ego_forward_velocity", "ego_longitudinal_wheel_slip", "ego_slip_angle",
    "ego_tire_temperature", "planned_acceleration", "planned_steering",
    "tire_pressure", "tire_type", "wet_grip"};
  bool found = false;
  for (const auto & s : doc["sets"]) {
    found |= s.get<std::vector<std::string>>() == table;
  }
  EXPECT_TRUE(found);
}

TEST(Cli, SampleWritesCsv)
{
  const auto dir = scratch();
  const auto csv = (dir / "sample.csv").string();
  const auto r = run_cli({"sample", "fixture:heavy-rain-model", "-n", "10", "--seed", "2", "-o", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto stdout_csv = run_cli({"sample", "fixture:heavy-rain-model", "-n", "10", "--seed", "2"});
  std::ifstream in(csv);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), stdout_csv.out);
}

TEST(Cli, IndicatorsFromData)
{
  const auto dir = scratch();
  const auto csv = (dir / "reality.csv").string();
  ASSERT_EQ(run_cli({"sample", "fixture:heavy-rain-reality", "-n", "50000", "--seed", "9", "-o", csv}).code, 0);
  const auto r = run_cli(
    {"--format", "json", "indicators", "--reference", "fixture:heavy-rain-reality", "--candidate",
     "fixture:heavy-rain-model", "--set", "V1,V2,X", "--data", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["indicators"][0]["value"].get<double>(), 0.2, 0.02);
}

TEST(Cli, AdjustOrderAndEmptySet)
{
  const auto r = run_cli({"adjust", "fixture:heavy-rain-model"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(":\n  {V2}\n  {V1, V2}\n"), std::string::npos) << r.out;
  const auto empty = run_cli({"adjust", "fixture:heavy-rain-model", "--x", "V1", "--y", "V2"});
  EXPECT_NE(empty.out.find("  ∅\n"), std::string::npos) << empty.out;
}

TEST(Cli, MetricsDecelerationAndStraightLine)
{
  const auto dir = scratch();
  std::ofstream brake(dir / "brake3.txt"), straight(dir / "straight.txt"), field(dir / "field8.txt");
  brake.precision(17);
  for (int k = 0; k <= 8; ++k) {
    const double t = 0.25 * k;
    brake << t << " " << 20.0 * t - 1.5 * t * t << " 0\n";
    straight << t << " " << 2.0 * t << " 0\n";
  }
  field << "1 1 -50 -50 100 100\n-8 6\n";
  brake.close();
  straight.close();
  field.close();
  const auto r = run_cli(
    {"--format", "json", "metrics", "--trajectories", (dir / "brake3.txt").string(), "--field",
     (dir / "field8.txt").string(), "--edges", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["btn_dt"].get<double>(), 0.375, 1e-9);
  EXPECT_NEAR(doc["aggregate"].get<double>(), 0.375, 1e-9);
  EXPECT_EQ(doc["bin"]["label"], "low");
  const auto zero = nlohmann::json::parse(run_cli(
    {"--format", "json", "metrics", "--trajectories", (dir / "straight.txt").string(), "--field",
     (dir / "field8.txt").string()}).out);
  EXPECT_EQ(zero["btn_dt"], 0);
  EXPECT_EQ(zero["stn_dt"], 0);
  EXPECT_EQ(zero["aggregate"], 0);
}

TEST(Cli, EmptyInterventionIsObservational)
{
  const auto r = run_cli({"--format", "json", "effect", "fixture:heavy-rain-reality"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(nlohmann::json::parse(r.out)["expectation"].get<double>(), 0.534, 1e-12);
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run_cli({"--help"}).code, cli::kClean);
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"validate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"validate", "/nonexistent.json"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"validate", "fixture:nope"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"effect", "fixture:heavy-rain-reality", "--do", "X=maybe"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"effect", "fixture:heavy-rain-reality", "--route", "magic"}).code, cli::kUsage);
  EXPECT_EQ(
    run_cli({"effect", "fixture:heavy-rain-reality", "--do", "V1=Summer", "--route", "backdoor", "--set", "X"}).code,
    cli::kFinding);
}

TEST(Cli, ValidateReportsCycleAsFinding)
{
  const auto dir = scratch();
  std::string text;
  {
    std::ifstream in(CRITCAUSAL_TEST_DATA "/simple_relation.json");
    std::stringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  const auto pos = text.find("\"edges\": [");
  text.insert(pos + 10, "\n    [\"phi\", \"w1\"],");
  const auto path = dir / "cyclic.json";
  std::ofstream(path) << text;
  const auto r = run_cli({"--format", "json", "validate", path.string()});
  EXPECT_EQ(r.code, cli::kFinding);
  EXPECT_NE(r.out.find("CycleDetected"), std::string::npos) << r.out;
}

}  // namespace
}  // namespace critcausal
