// Copyright 2026 The stablemesh Authors.
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

#include "stablemesh/error.h"

namespace stablemesh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::NonManifoldVertex: return "NonManifoldVertex";
    case ErrorCode::DuplicateTriangle: return "DuplicateTriangle";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::InconsistentOrientation: return "InconsistentOrientation";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::StarNotDisk: return "StarNotDisk";
    case ErrorCode::CollapseRejected: return "CollapseRejected";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::CandidateInfeasible: return "CandidateInfeasible";
    case ErrorCode::MissingAtoms: return "MissingAtoms";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::HookViolation: return "HookViolation";
    case ErrorCode::NonPositiveIntegral: return "NonPositiveIntegral";
    case ErrorCode::AtomTooCloseToSurface: return "AtomTooCloseToSurface";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::CandidateInfeasible:
    case ErrorCode::NonPositiveIntegral:
    case ErrorCode::AtomTooCloseToSurface:
    case ErrorCode::InvalidRadius:
      return true;
    default:
      return false;
  }
}

}  // namespace stablemesh
