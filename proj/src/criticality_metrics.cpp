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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace critcausal
{

namespace
{

constexpr double kTimeTolerance = 1e-9;

std::string format_point(const Eigen::Vector2d & p)
{
  std::ostringstream out;
  out << "(" << p.x() << ", " << p.y() << ")";
  return out.str();
}

bool in_window(const DrivingTask & dt, double t)
{
  return t >= dt.t_s - kTimeTolerance && t <= dt.t_s + dt.t_h + kTimeTolerance;
}

}  // namespace

Trajectory Trajectory::from_samples(const std::vector<std::array<double, 3>> & samples)
{
  if (samples.size() < 5) {
    throw Error(
      ErrorCode::InvalidTrajectory,
      "a trajectory needs at least 5 samples, got " + std::to_string(samples.size()));
  }
  Trajectory traj;
  const auto n = static_cast<Eigen::Index>(samples.size());
  traj.t.resize(n);
  traj.position.resize(2, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto & s = samples[static_cast<std::size_t>(k)];
    if (!std::isfinite(s[0]) || !std::isfinite(s[1]) || !std::isfinite(s[2])) {
      throw Error(ErrorCode::InvalidTrajectory, "non-finite sample at index " + std::to_string(k));
    }
    traj.t[k] = s[0];
    traj.position.col(k) << s[1], s[2];
  }
  const double step = traj.t[1] - traj.t[0];
  for (Eigen::Index k = 1; k < n; ++k) {
    const double d = traj.t[k] - traj.t[k - 1];
    if (!(d > 0.0)) {
      throw Error(ErrorCode::InvalidTrajectory, "time must be strictly increasing");
    }
    if (std::abs(d - step) > 1e-6 * step) {
      throw Error(ErrorCode::InvalidTrajectory, "time step must be uniform");
    }
  }
  return traj;
}

PathAccelerations path_accelerations(const Trajectory & traj)
{
  const Eigen::Index n = traj.size();
  const double h = traj.dt();
  PathAccelerations out;
  out.t = traj.t.segment(1, n - 2);
  out.longitudinal.resize(n - 2);
  out.lateral.resize(n - 2);
  for (Eigen::Index k = 1; k + 1 < n; ++k) {
    const Eigen::Vector2d chord = traj.position.col(k + 1) - traj.position.col(k - 1);
    const double len = chord.norm();
    if (len <= 1e-12) {
      throw Error(
        ErrorCode::DegenerateTrajectory,
        "zero-length path segment around t = " + std::to_string(traj.t[k]));
    }
    const Eigen::Vector2d tangent = chord / len;
    const Eigen::Vector2d normal(-tangent.y(), tangent.x());
    const Eigen::Vector2d acc =
      (traj.position.col(k + 1) - 2.0 * traj.position.col(k) + traj.position.col(k - 1)) / (h * h);
    out.longitudinal[k - 1] = acc.dot(tangent);
    out.lateral[k - 1] = acc.dot(normal);
  }
  return out;
}

DrivingTask DrivingTask::covering(std::vector<Trajectory> trajectories)
{
  if (trajectories.empty()) {
    throw Error(ErrorCode::InvalidTrajectory, "a driving task needs at least one trajectory");
  }
  double start = -std::numeric_limits<double>::infinity();
  double end = std::numeric_limits<double>::infinity();
  for (const auto & traj : trajectories) {
    start = std::max(start, traj.t[0]);
    end = std::min(end, traj.t[traj.size() - 1]);
  }
  if (end < start) {
    throw Error(ErrorCode::InvalidTrajectory, "trajectories share no common time window");
  }
  DrivingTask dt;
  dt.trajectories = std::move(trajectories);
  dt.t_s = start;
  dt.t_h = end - start;
  return dt;
}

void DrivingTask::validate() const
{
  if (trajectories.empty()) {
    throw Error(ErrorCode::InvalidTrajectory, "a driving task needs at least one trajectory");
  }
  if (!(t_h >= 0.0)) {
    throw Error(ErrorCode::InvalidTrajectory, "horizon must be >= 0");
  }
  for (std::size_t g = 0; g < trajectories.size(); ++g) {
    const auto & t = trajectories[g].t;
    if (t[0] > t_s + kTimeTolerance || t[t.size() - 1] < t_s + t_h - kTimeTolerance) {
      throw Error(
        ErrorCode::InvalidTrajectory,
        "trajectory " + std::to_string(g) + " does not cover the driving-task window");
    }
  }
}

AccelField AccelField::uniform(
  double x0, double y0, double width, double height, double eta_long, double eta_lat)
{
  AccelField f;
  f.x0 = x0;
  f.y0 = y0;
  f.dx = width;
  f.dy = height;
  f.eta_long = Eigen::MatrixXd::Constant(1, 1, eta_long);
  f.eta_lat = Eigen::MatrixXd::Constant(1, 1, eta_lat);
  return f;
}

void AccelField::validate() const
{
  if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(x0) || !std::isfinite(y0)) {
    throw Error(ErrorCode::ValidationError, "field origin must be finite and cell sizes positive");
  }
  if (eta_long.size() == 0 || eta_long.rows() != eta_lat.rows() || eta_long.cols() != eta_lat.cols()) {
    throw Error(ErrorCode::ValidationError, "field needs matching non-empty grids");
  }
  if (!eta_long.allFinite() || !eta_lat.allFinite()) {
    throw Error(ErrorCode::ValidationError, "field values must be finite");
  }
  if (eta_long.maxCoeff() > 0.0) {
    throw Error(ErrorCode::ValidationError, "longitudinal availability must be <= 0");
  }
  if (eta_lat.minCoeff() < 0.0) {
    throw Error(ErrorCode::ValidationError, "lateral availability must be >= 0");
  }
}

std::pair<Eigen::Index, Eigen::Index> AccelField::cell(const Eigen::Vector2d & p) const
{
  auto locate = [](double v, double origin, double step, Eigen::Index count) -> Eigen::Index {
    const double u = (v - origin) / step;
    if (u < -1e-9 || u > static_cast<double>(count) + 1e-9) {
      return -1;
    }
    return std::clamp<Eigen::Index>(static_cast<Eigen::Index>(std::floor(u)), 0, count - 1);
  };
  const Eigen::Index i = locate(p.x(), x0, dx, nx());
  const Eigen::Index j = locate(p.y(), y0, dy, ny());
  if (i < 0 || j < 0) {
    throw Error(ErrorCode::FieldCoverageGap, "field does not cover " + format_point(p));
  }
  return {j, i};
}

double along_req_dt(const DrivingTask & dt)
{
  dt.validate();
  double best = -std::numeric_limits<double>::infinity();
  for (const auto & traj : dt.trajectories) {
    const PathAccelerations acc = path_accelerations(traj);
    double worst = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k < acc.t.size(); ++k) {
      if (in_window(dt, acc.t[k])) {
        worst = std::min(worst, acc.longitudinal[k]);
      }
    }
    best = std::max(best, std::isfinite(worst) ? worst : 0.0);
  }
  return std::min(0.0, best);
}

double alat_req_dt(const DrivingTask & dt)
{
  dt.validate();
  double best = std::numeric_limits<double>::infinity();
  for (const auto & traj : dt.trajectories) {
    const PathAccelerations acc = path_accelerations(traj);
    double worst = 0.0;
    for (Eigen::Index k = 0; k < acc.t.size(); ++k) {
      if (in_window(dt, acc.t[k])) {
        worst = std::max(worst, std::abs(acc.lateral[k]));
      }
    }
    best = std::min(best, worst);
  }
  return best;
}

namespace
{

template<typename Visit>
void for_each_sample_cell(const DrivingTask & dt, const AccelField & field, Visit visit)
{
  dt.validate();
  field.validate();
  for (const auto & traj : dt.trajectories) {
    for (Eigen::Index k = 0; k < traj.size(); ++k) {
      if (in_window(dt, traj.t[k])) {
        const auto [j, i] = field.cell(traj.position.col(k));
        visit(j, i);
      }
    }
  }
}

double positive_ratio(double num, double den, const char * what)
{
  if (den == 0.0) {
    throw Error(ErrorCode::ZeroAvailableAcceleration, std::string("no ") + what + " acceleration available");
  }
  const double r = num / den;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

double along_min(const DrivingTask & dt, const AccelField & field)
{
  double out = -std::numeric_limits<double>::infinity();
  for_each_sample_cell(dt, field, [&](Eigen::Index j, Eigen::Index i) {
    out = std::max(out, field.eta_long(j, i));
  });
  return out;
}

double alat_min(const DrivingTask & dt, const AccelField & field)
{
  double out = std::numeric_limits<double>::infinity();
  for_each_sample_cell(dt, field, [&](Eigen::Index j, Eigen::Index i) {
    out = std::min(out, std::abs(field.eta_lat(j, i)));
  });
  return out;
}

double btn_dt(const DrivingTask & dt, const AccelField & field)
{
  return positive_ratio(along_req_dt(dt), along_min(dt, field), "longitudinal");
}

double stn_dt(const DrivingTask & dt, const AccelField & field)
{
  return positive_ratio(alat_req_dt(dt), alat_min(dt, field), "lateral");
}

std::string_view to_string(AggregateMode m)
{
  switch (m) {
    case AggregateMode::Max:
      return "max";
    case AggregateMode::Mean:
      return "mean";
    case AggregateMode::Euclidean:
      return "euclidean";
  }
  return "max";
}

AggregateMode aggregate_mode_from_string(std::string_view s)
{
  for (AggregateMode m : {AggregateMode::Max, AggregateMode::Mean, AggregateMode::Euclidean}) {
    if (to_string(m) == s) {
      return m;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown aggregation mode '" + std::string(s) + "'");
}

double aggregate(double btn, double stn, AggregateMode mode)
{
  if (!(btn >= 0.0) || !(stn >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "aggregation inputs must be >= 0");
  }
  switch (mode) {
    case AggregateMode::Mean:
      return 0.5 * (btn + stn);
    case AggregateMode::Euclidean:
      return std::hypot(btn, stn);
    case AggregateMode::Max:
      break;
  }
  return std::max(btn, stn);
}

Bin discretize_metric(
  double value, const std::vector<double> & edges, const std::vector<std::string> & labels)
{
  if (edges.empty()) {
    throw Error(ErrorCode::NonMonotoneEdges, "at least one bin edge is required");
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (!std::isfinite(edges[k]) || (k > 0 && !(edges[k] > edges[k - 1]))) {
      throw Error(ErrorCode::NonMonotoneEdges, "bin edges must be finite and strictly ascending");
    }
  }
  if (!labels.empty() && labels.size() != edges.size() + 1) {
    throw Error(ErrorCode::InvalidArgument, "need one label per bin");
  }
  Bin bin;
  bin.index = static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), value) - edges.begin());
  if (!labels.empty()) {
    bin.label = labels[bin.index];
  } else if (edges.size() == 1) {
    bin.label = bin.index == 0 ? "low" : "high";
  } else if (edges.size() == 2) {
    static const char * names[] = {"low", "medium", "high"};
    bin.label = names[bin.index];
  } else {
    bin.label = "bin" + std::to_string(bin.index);
  }
  return bin;
}

MetricReport evaluate_metrics(
  const DrivingTask & dt, const AccelField & field, AggregateMode mode,
  const std::optional<std::vector<double>> & edges)
{
  MetricReport r;
  r.along_req = along_req_dt(dt);
  r.along_min = along_min(dt, field);
  r.alat_req = alat_req_dt(dt);
  r.alat_min = alat_min(dt, field);
  r.btn = positive_ratio(r.along_req, r.along_min, "longitudinal");
  r.stn = positive_ratio(r.alat_req, r.alat_min, "lateral");
  r.aggregate = aggregate(r.btn, r.stn, mode);
  r.mode = mode;
  if (edges) {
    r.bin = discretize_metric(r.aggregate, *edges);
  }
  return r;
}

}  // namespace critcausal
