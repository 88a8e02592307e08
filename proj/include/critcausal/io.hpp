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

#ifndef CRITCAUSAL__IO_HPP_
#define CRITCAUSAL__IO_HPP_

#include "critcausal/context.hpp"
#include "critcausal/criticality_metrics.hpp"
#include "critcausal/discrete_model.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace critcausal
{

/// Sorted keys, two-space indent, one array element per line, integral
/// numbers without fraction and other reals with 12 significant digits.
std::string canonical_json(const nlohmann::json & value);

/// Shortest "%.12g" text of a real, as used by canonical_json.
std::string format_real(double v);

struct LoadedModel
{
  CausalRelation relation;
  DiscreteModel model;
};

/// Throws ParseError (with line or field path) and ValidationError (wrapping
/// structure, spec and CPD errors).
LoadedModel parse_model(std::string_view text);
LoadedModel load_model(const std::filesystem::path & path);

nlohmann::json model_to_json(const CausalRelation & relation, const DiscreteModel & model);
std::string serialize_model(const CausalRelation & relation, const DiscreteModel & model);
void save_model(
  const std::filesystem::path & path, const CausalRelation & relation, const DiscreteModel & model);

/// Comma-separated, first row names the columns, every later row holds
/// category labels. Throws UnknownNode, UnknownLabel, RaggedRow, IoError.
Dataset parse_dataset(
  std::string_view text, const std::vector<VariableSpec> & specs,
  Provenance provenance = Provenance::RealWorld);
Dataset load_dataset(
  const std::filesystem::path & path, const std::vector<VariableSpec> & specs,
  Provenance provenance = Provenance::RealWorld);
std::string serialize_dataset(const Dataset & d);
void save_dataset(const std::filesystem::path & path, const Dataset & d);

/// Whitespace-separated "t x y" lines; blank lines and '#' comments skipped.
Trajectory parse_trajectory(std::string_view text);
Trajectory load_trajectory(const std::filesystem::path & path);

/// Header "nx ny x0 y0 dx dy", then nx * ny "eta_long eta_lat" pairs for
/// cells j * nx + i.
AccelField parse_field(std::string_view text);
AccelField load_field(const std::filesystem::path & path);

enum class FixtureId { HeavyRainReality, HeavyRainModel, FrictionRelation };

std::string_view to_string(FixtureId id);
/// Throws InvalidArgument.
FixtureId fixture_from_string(std::string_view s);
/// Canonical model-file text compiled into the library.
std::string_view fixture_text(FixtureId id);
LoadedModel fixture(FixtureId id);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// Throws IoError.
std::string read_file(const std::filesystem::path & path);
void write_file(const std::filesystem::path & path, std::string_view text);

}  // namespace critcausal

#endif  // CRITCAUSAL__IO_HPP_
