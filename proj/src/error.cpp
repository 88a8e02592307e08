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

#include "critcausal/error.hpp"

namespace critcausal
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::DuplicateNode: return "DuplicateNode";
    case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::InvalidCpd: return "InvalidCpd";
    case ErrorCode::NotFullyInstantiated: return "NotFullyInstantiated";
    case ErrorCode::InsufficientInstantiation: return "InsufficientInstantiation";
    case ErrorCode::ZeroProbabilityCondition: return "ZeroProbabilityCondition";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::NotMarkovian: return "NotMarkovian";
    case ErrorCode::ParentsNotInstantiated: return "ParentsNotInstantiated";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotIdentifiable: return "NotIdentifiable";
    case ErrorCode::NotBinaryPhenomenon: return "NotBinaryPhenomenon";
    case ErrorCode::InfiniteDivergence: return "InfiniteDivergence";
    case ErrorCode::DivisionByZeroEffect: return "DivisionByZeroEffect";
    case ErrorCode::ZeroMeanCriticality: return "ZeroMeanCriticality";
    case ErrorCode::DegenerateTrajectory: return "DegenerateTrajectory";
    case ErrorCode::InvalidTrajectory: return "InvalidTrajectory";
    case ErrorCode::FieldCoverageGap: return "FieldCoverageGap";
    case ErrorCode::ZeroAvailableAcceleration: return "ZeroAvailableAcceleration";
    case ErrorCode::NonMonotoneEdges: return "NonMonotoneEdges";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::RaggedRow: return "RaggedRow";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace critcausal
