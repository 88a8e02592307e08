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

#include "critcausal/criticality_metrics.hpp"
#include "critcausal/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

namespace critcausal
{
namespace
{

Trajectory make(double t0, double t1, double step, const std::function<std::array<double, 2>(double)> & f)
{
  std::vector<std::array<double, 3>> samples;
  const int n = static_cast<int>(std::lround((t1 - t0) / step));
  for (int k = 0; k <= n; ++k) {
    const double t = t0 + k * step;
    const auto p = f(t);
    samples.push_back({t, p[0], p[1]});
  }
  return Trajectory::from_samples(samples);
}

Trajectory braking(double v0, double a)
{
  return make(0.0, 2.0, 0.05, [=](double t) { return std::array<double, 2>{v0 * t - 0.5 * a * t * t, 0.0}; });
}

Trajectory circle(double radius, double v)
{
  return make(0.0, 3.0, 0.01, [=](double t) {
    return std::array<double, 2>{radius * std::sin(v * t / radius), radius - radius * std::cos(v * t / radius)};
  });
}

TEST(Metrics, UniformDecelerationLongitudinal)
{
  const auto dt = DrivingTask::covering({braking(20.0, 4.0)});
  EXPECT_NEAR(along_req_dt(dt), -4.0, 0.04);
  EXPECT_NEAR(alat_req_dt(dt), 0.0, 1e-9);
}

TEST(Metrics, CircularArcLateral)
{
  const auto dt = DrivingTask::covering({circle(50.0, 10.0)});
  EXPECT_NEAR(alat_req_dt(dt), 2.0, 0.04);
  const auto acc = path_accelerations(circle(50.0, 10.0));
  EXPECT_GT(acc.lateral.minCoeff(), 0.0);
}

TEST(Metrics, StraightConstantVelocityIsExactlyZero)
{
  const auto traj = make(0.0, 2.0, 0.25, [](double t) { return std::array<double, 2>{2.0 * t, 1.0}; });
  const auto dt = DrivingTask::covering({traj});
  const auto field = AccelField::uniform(-10, -10, 40, 40, -6.0, 5.0);
  const double btn = btn_dt(dt, field);
  const double stn = stn_dt(dt, field);
  EXPECT_EQ(btn, 0.0);
  EXPECT_EQ(stn, 0.0);
  EXPECT_FALSE(std::signbit(btn));
}

TEST(Metrics, RequiredEqualsAvailableGivesOne)
{
  const auto dt = DrivingTask::covering({braking(20.0, 4.0)});
  const auto field = AccelField::uniform(-10, -10, 100, 40, along_req_dt(dt), 3.0);
  EXPECT_NEAR(btn_dt(dt, field), 1.0, 1e-9);
  const auto arc = DrivingTask::covering({circle(50.0, 10.0)});
  const auto arc_field = AccelField::uniform(-60, -60, 200, 200, -3.0, alat_req_dt(arc));
  EXPECT_NEAR(stn_dt(arc, arc_field), 1.0, 1e-9);
}

TEST(Metrics, BestOfSeveralTrajectories)
{
  const auto dt = DrivingTask::covering({braking(20.0, 4.0), braking(20.0, 2.0)});
  EXPECT_NEAR(along_req_dt(dt), -2.0, 0.02);
}

TEST(Metrics, FieldLookupAndCoverage)
{
  AccelField f;
  f.x0 = 0;
  f.y0 = 0;
  f.dx = 1;
  f.dy = 1;
  f.eta_long = Eigen::MatrixXd::Constant(2, 3, -5.0);
  f.eta_lat = Eigen::MatrixXd::Constant(2, 3, 4.0);
  EXPECT_EQ(f.cell({2.5, 1.5}), std::make_pair(Eigen::Index{1}, Eigen::Index{2}));
  EXPECT_EQ(f.cell({0.0, 0.0}), std::make_pair(Eigen::Index{0}, Eigen::Index{0}));
  try {
    f.cell({5.0, 0.5});
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldCoverageGap);
  }
  f.eta_long(0, 0) = 1.0;
  EXPECT_THROW(f.validate(), Error);
}

TEST(Metrics, ZeroAvailableAcceleration)
{
  const auto dt = DrivingTask::covering({braking(20.0, 4.0)});
  const auto field = AccelField::uniform(-10, -10, 100, 40, 0.0, 0.0);
  try {
    btn_dt(dt, field);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroAvailableAcceleration);
  }
}

TEST(Metrics, InvalidTrajectories)
{
  EXPECT_THROW(Trajectory::from_samples({{0, 0, 0}, {1, 1, 0}}), Error);
  EXPECT_THROW(
    Trajectory::from_samples({{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {2.5, 3, 0}, {4, 4, 0}}), Error);
  const auto still = make(0.0, 1.0, 0.25, [](double) { return std::array<double, 2>{1.0, 1.0}; });
  try {
    path_accelerations(still);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTrajectory);
  }
}

TEST(Metrics, AggregateAndDiscretize)
{
  EXPECT_EQ(aggregate(0.3, 0.4, AggregateMode::Max), 0.4);
  EXPECT_NEAR(aggregate(0.3, 0.4, AggregateMode::Mean), 0.35, 1e-15);
  EXPECT_NEAR(aggregate(0.3, 0.4, AggregateMode::Euclidean), 0.5, 1e-15);
  EXPECT_EQ(discretize_metric(0.2, {0.5}).label, "low");
  EXPECT_EQ(discretize_metric(0.5, {0.5}).label, "high");
  EXPECT_EQ(discretize_metric(0.7, {0.5, 0.9}).label, "medium");
  EXPECT_EQ(discretize_metric(2.0, {0.5, 0.9, 1.5}).label, "bin3");
  EXPECT_EQ(discretize_metric(0.7, {0.5}, {"ok", "bad"}).index, 1u);
  try {
    discretize_metric(0.7, {0.9, 0.5});
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::NonMonotoneEdges);
  }
}

TEST(Metrics, EvaluateReport)
{
  const auto dt = DrivingTask::covering({braking(20.0, 4.0)});
  const auto field = AccelField::uniform(-10, -10, 100, 40, -8.0, 4.0);
  const auto r = evaluate_metrics(dt, field, AggregateMode::Max, std::vector<double>{0.3, 0.7});
  EXPECT_NEAR(r.btn, 0.5, 0.01);
  EXPECT_NEAR(r.stn, 0.0, 1e-9);
  EXPECT_EQ(r.aggregate, std::max(r.btn, r.stn));
  ASSERT_TRUE(r.bin);
  EXPECT_EQ(r.bin->label, "medium");
}

}  // namespace
}  // namespace critcausal
