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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace stablemesh {

enum class ErrorCode {
  InvalidArgument,
  IndexOutOfRange,
  NonManifoldEdge,
  NonManifoldVertex,
  DuplicateTriangle,
  DegenerateTriangle,
  InconsistentOrientation,
  NotAnEdge,
  StarNotDisk,
  CollapseRejected,
  IsolatedVertex,
  CandidateInfeasible,
  MissingAtoms,
  InvalidInput,
  HookViolation,
  NonPositiveIntegral,
  AtomTooCloseToSurface,
  InvalidRadius,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// True for failures caused by the numerics of otherwise well-formed input
/// (quadrature blow-ups, infeasible placements, bad radii).
bool is_numerical(ErrorCode code);

/// The single exception type thrown by the library. `index` carries the
/// offending atom, vertex, triangle or 1-based line number when one applies,
/// and -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long index = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        index_(index) {}

  ErrorCode code() const { return code_; }
  long index() const { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

}  // namespace stablemesh
