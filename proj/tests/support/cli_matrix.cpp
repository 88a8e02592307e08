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

#include "cli_matrix.hpp"

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace critcausal::testing
{

void write_metric_inputs(const std::filesystem::path & dir)
{
  std::filesystem::create_directories(dir);
  std::ofstream brake(dir / "brake.txt");
  std::ofstream swerve(dir / "swerve.txt");
  brake.precision(17);
  swerve.precision(17);
  brake << "# t x y\n";
  swerve << "# t x y\n";
  for (int k = 0; k <= 40; ++k) {
    const double t = 0.05 * k;
    brake << t << " " << 20.0 * t - 2.0 * t * t << " 0\n";
    swerve << t << " " << 20.0 * t << " " << 1.75 * (1.0 - std::cos(M_PI * t / 2.0)) << "\n";
  }
  std::ofstream field(dir / "field.txt");
  field << "# nx ny x0 y0 dx dy, then eta_long eta_lat per cell\n4 2 -10 -10 20 10\n";
  for (int c = 0; c < 8; ++c) {
    field << (c % 2 ? -7.5 : -8.0) << " " << 6.0 << "\n";
  }
}

std::vector<std::vector<std::string>> cli_matrix(const std::filesystem::path & dir)
{
  const std::string brake = (dir / "brake.txt").string();
  const std::string swerve = (dir / "swerve.txt").string();
  const std::string field = (dir / "field.txt").string();
  return {
    {"--format", "json", "validate", "fixture:heavy-rain-reality"},
    {"--format", "json", "validate", "fixture:heavy-rain-model"},
    {"--format", "json", "validate", "fixture:friction-relation"},
    {"--format", "json", "adjust", "fixture:heavy-rain-reality"},
    {"--format", "json", "adjust", "fixture:friction-relation", "--minimal", "--max", "8"},
    {"--format", "json", "effect", "fixture:heavy-rain-reality", "--do", "X=CP", "--route", "truncated"},
    {"--format", "json", "effect", "fixture:heavy-rain-reality", "--do", "X=notCP", "--route", "parent"},
    {"--format", "json", "effect", "fixture:heavy-rain-reality", "--do", "X=CP", "--route", "backdoor",
     "--set", "V1,V3"},
    {"--format", "json", "indicators", "--reference", "fixture:heavy-rain-reality", "--candidate",
     "fixture:heavy-rain-model", "--set", "V1,V2,X"},
    {"--format", "json", "indicators", "--reference", "fixture:heavy-rain-reality", "--candidate",
     "fixture:heavy-rain-model", "--set", "V1,V2,X", "--rho3", "restrict-to-N", "--bits"},
    {"--format", "json", "sample", "fixture:heavy-rain-reality", "-n", "200", "--seed", "5"},
    {"--format", "json", "sp", "fixture:heavy-rain-reality", "--sp", "V2=Slow", "--report"},
    {"--format", "json", "metrics", "--trajectories", brake, swerve, "--field", field, "--edges", "0.3,0.7"},
  };
}

CliResult run_cli(const std::vector<std::string> & args)
{
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace critcausal::testing
