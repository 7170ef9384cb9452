// Copyright 2026 The permutwirl Authors
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

#include "permutwirl/error.hpp"

namespace permutwirl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::BlochOutsideBall: return "BlochOutsideBall";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::InvalidBellParams: return "InvalidBellParams";
    case ErrorCode::NonRealSum: return "NonRealSum";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::SampleCountZero: return "SampleCountZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::FlagOutOfRange: return "FlagOutOfRange";
  }
  return "Unknown";
}

}  // namespace permutwirl
