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

#ifndef CRITCAUSAL__ERROR_HPP_
#define CRITCAUSAL__ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace critcausal
{

enum class ErrorCode {
  // graph construction and queries
  CycleDetected,
  DuplicateNode,
  UnknownEndpoint,
  SelfLoop,
  UnknownNode,
  OverlappingSets,
  // discrete models
  UnknownCategory,
  InvalidCpd,
  NotFullyInstantiated,
  InsufficientInstantiation,
  ZeroProbabilityCondition,
  StateSpaceTooLarge,
  EmptyDataset,
  // causal engine
  NotMarkovian,
  ParentsNotInstantiated,
  NotAdmissible,
  NotIdentifiable,
  NotBinaryPhenomenon,
  // indicators
  InfiniteDivergence,
  DivisionByZeroEffect,
  ZeroMeanCriticality,
  // criticality metrics
  DegenerateTrajectory,
  InvalidTrajectory,
  FieldCoverageGap,
  ZeroAvailableAcceleration,
  NonMonotoneEdges,
  // io
  ParseError,
  ValidationError,
  UnknownLabel,
  RaggedRow,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Single exception type of the library; `code()` distinguishes the failure.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace critcausal

#endif  // CRITCAUSAL__ERROR_HPP_
