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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stablemesh/cost.h"
#include "stablemesh/gb_energy.h"
#include "stablemesh/mesh.h"

namespace stablemesh {

inline constexpr std::string_view kVersion = "0.1.0";

struct CompareParams {
  GbCostParams gb;
  GBParams dielectric;
  QuadratureOrder quadrature = QuadratureOrder::centroid_1pt;
  int stages = 1;
  /// Placeholder non-polar coefficient.
  double gamma = kDefaultSurfaceTension;
  /// Report energies in kcal/mol instead of tau * e^2/angstrom.
  bool physical_units = false;
  /// Record wall time; off gives byte-identical reports across runs.
  bool timing = true;
};

struct ReportRow {
  std::string cost_kind;
  int target_faces = 0;
  int actual_faces = 0;
  int collapses = 0;
  bool queue_exhausted = false;
  double g_pol = 0.0;
  /// |G_pol(row) - G_pol(reference)|
  double g_pol_deviation = 0.0;
  double surface_area = 0.0;
  double nonpolar = 0.0;
  double min_q = 0.0;
  double mean_q = 0.0;
  double well_centered_fraction = 0.0;
  double wall_time_s = 0.0;
  /// "ok" or "failed"; failed rows carry the error in `reason`.
  std::string status = "ok";
  std::string reason;
};

struct ComparisonReport {
  std::vector<ReportRow> rows;
  /// Provenance: parameters, version, input checksums.
  std::map<std::string, std::string> metadata;
  /// Per-target observation: does vol show the largest energy deviation among
  /// the kinds run? Informational only.
  std::map<int, bool> vol_largest_deviation;
};

/// "50%" -> round(0.5 * faces); plain integers pass through. Throws
/// InvalidArgument.
int resolve_target(std::string_view text, int faces);

/**
 * Reference row on the input mesh, then one row per (cost kind, target) in
 * argument order, each decimating a fresh copy. Errors in a cell are
 * recorded in that row and the sweep continues.
 */
ComparisonReport run_compare(const TriangleMesh& mesh, std::span<const Atom> atoms,
                             std::span<const CostKind> cost_kinds, std::span<const int> targets,
                             const CompareParams& params);

std::string to_csv(const ComparisonReport& report);
std::string to_json(const ComparisonReport& report);

}  // namespace stablemesh
