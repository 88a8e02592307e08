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

#ifndef CRITCAUSAL__CRITICALITY_METRICS_HPP_
#define CRITCAUSAL__CRITICALITY_METRICS_HPP_

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace critcausal
{

/// Ego path sampled on a uniform time grid; column k of `position` is (x, y) at t[k].
struct Trajectory
{
  Eigen::VectorXd t;
  Eigen::Matrix2Xd position;

  /// Throws InvalidTrajectory (fewer than 5 samples, non-increasing or
  /// non-uniform time).
  static Trajectory from_samples(const std::vector<std::array<double, 3>> & samples);

  Eigen::Index size() const { return t.size(); }
  double dt() const { return t[1] - t[0]; }
};

/// Path-frame accelerations at the interior samples 1 .. n-2.
struct PathAccelerations
{
  Eigen::VectorXd t;
  Eigen::VectorXd longitudinal;
  /// Signed, positive to the left of the direction of travel.
  Eigen::VectorXd lateral;
};

/// Central differences; tangent from (p[k+1] - p[k-1]). Throws DegenerateTrajectory.
PathAccelerations path_accelerations(const Trajectory & traj);

struct DrivingTask
{
  std::vector<Trajectory> trajectories;
  double t_s = 0.0;
  double t_h = 0.0;

  /// Window [t_s, t_s + t_h] common to all trajectories. Throws InvalidTrajectory.
  static DrivingTask covering(std::vector<Trajectory> trajectories);
  /// Throws InvalidTrajectory when empty or a trajectory misses the window.
  void validate() const;
};

/**
 * Available acceleration on a regular lattice. Cell (i, j) spans
 * [x0 + i dx, x0 + (i + 1) dx) x [y0 + j dy, y0 + (j + 1) dy); matrices are
 * indexed (j, i).
 */
struct AccelField
{
  double x0 = 0.0;
  double y0 = 0.0;
  double dx = 1.0;
  double dy = 1.0;
  /// ny x nx, values <= 0.
  Eigen::MatrixXd eta_long;
  /// ny x nx, values >= 0.
  Eigen::MatrixXd eta_lat;

  static AccelField uniform(
    double x0, double y0, double width, double height, double eta_long, double eta_lat);

  Eigen::Index nx() const { return eta_long.cols(); }
  Eigen::Index ny() const { return eta_long.rows(); }

  /// Throws ValidationError.
  void validate() const;
  /// Nearest cell (j, i) containing p. Throws FieldCoverageGap.
  std::pair<Eigen::Index, Eigen::Index> cell(const Eigen::Vector2d & p) const;
};

/// min(0, max over trajectories of the minimum longitudinal acceleration).
double along_req_dt(const DrivingTask & dt);
/// Min over trajectories of the maximum |lateral acceleration|.
double alat_req_dt(const DrivingTask & dt);
/// Max of eta_long over all samples of the task (least available braking).
double along_min(const DrivingTask & dt, const AccelField & field);
/// Min of |eta_lat| over all samples of the task.
double alat_min(const DrivingTask & dt, const AccelField & field);

/// along_req / along_min. Throws ZeroAvailableAcceleration.
double btn_dt(const DrivingTask & dt, const AccelField & field);
/// alat_req / alat_min. Throws ZeroAvailableAcceleration.
double stn_dt(const DrivingTask & dt, const AccelField & field);

enum class AggregateMode { Max, Mean, Euclidean };

std::string_view to_string(AggregateMode m);
AggregateMode aggregate_mode_from_string(std::string_view s);

/// Throws InvalidArgument for negative inputs.
double aggregate(double btn, double stn, AggregateMode mode = AggregateMode::Max);

struct Bin
{
  std::size_t index = 0;
  std::string label;
};

/// Half-open bins [e_k, e_k+1); a value on an edge goes to the upper bin.
/// Default labels: low/high for one edge, low/medium/high for two, bin<k>
/// otherwise. Throws NonMonotoneEdges, InvalidArgument.
Bin discretize_metric(
  double value, const std::vector<double> & edges,
  const std::vector<std::string> & labels = {});

struct MetricReport
{
  double along_req = 0.0;
  double along_min = 0.0;
  double alat_req = 0.0;
  double alat_min = 0.0;
  double btn = 0.0;
  double stn = 0.0;
  double aggregate = 0.0;
  AggregateMode mode = AggregateMode::Max;
  std::optional<Bin> bin;
};

MetricReport evaluate_metrics(
  const DrivingTask & dt, const AccelField & field, AggregateMode mode = AggregateMode::Max,
  const std::optional<std::vector<double>> & edges = std::nullopt);

}  // namespace critcausal

#endif  // CRITCAUSAL__CRITICALITY_METRICS_HPP_
