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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "stablemesh/mesh.h"
#include "stablemesh/quadric.h"
#include "stablemesh/vec3.h"

namespace stablemesh {

/// Edge-collapse cost functions.
///   qe     sum of squared distances to the endpoint planes
///   vol    squared tetrahedral volume swept by the star triangles
///   pb     change in triangle quality over the surviving star triangles
///   gb     edge length (or quadric error, per GbCostParams::variant)
///          + lambda * atom-centre shift
///   gb_qe  gb with the quadric-error first term forced
enum class CostKind { qe, vol, pb, gb, gb_qe };

std::string_view to_string(CostKind kind);
/// Throws Error(InvalidArgument) for unknown names.
CostKind parse_cost_kind(std::string_view name);
bool needs_atoms(CostKind kind);

enum class GbVariant { edge_length, qe_term };

struct GbCostParams {
  /// Neighbour-capture radius around each endpoint (angstroms).
  double rho = 5.0;
  double lambda = 1e-8;
  GbVariant variant = GbVariant::edge_length;

  /// Throws Error(InvalidArgument) unless rho > 0 and lambda >= 0.
  void check() const;
};

struct CollapseCandidate {
  VertexId v1 = -1;
  VertexId v2 = -1;
  Vec3 placement;
  double cost = 0.0;
  CostKind kind = CostKind::qe;
  /// Version of the edge when the candidate was computed.
  std::uint32_t stamp = 0;
};

/// Sum of p p^T over the planes of the non-degenerate triangles around v.
/// Planes are unit-normalized; with `area_weighted` each term is scaled by
/// the triangle area. Throws IsolatedVertex when no triangle contributes.
Quadric vertex_quadric(const TriangleMesh& mesh, VertexId v, bool area_weighted = false);

/// v^T (Q1 + Q2) v.
double quadric_cost(const Quadric& q1, const Quadric& q2, const Vec3& placement);

QuadricPlacement qe_optimal_placement(const Quadric& q1, const Quadric& q2, const Vec3& v1,
                                      const Vec3& v2);

/// Row vector G with G . [v 1] = 6 * signed volume of the tetrahedron (v, a, b, c).
std::array<double, 4> volume_row(const Vec3& a, const Vec3& b, const Vec3& c);

/// (1/2)(1/18) sum G^T G over every triangle incident to v1 or v2.
Quadric volume_quadric(const TriangleMesh& mesh, const EdgeStar& star);
double volume_cost(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement);

/// Sum over the surviving star triangles of q(after) - q(before). Negative
/// values mean the collapse improves quality. Throws DegenerateTriangle.
double quality_cost(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement);

/// Centroids of the surviving star triangles before and after moving the edge
/// to `placement`, upper fan first.
struct CentroidShift {
  std::vector<Vec3> before;
  std::vector<Vec3> after;
};
CentroidShift centroid_shift(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement);

/// |sum_{i,j} |c_i - x_j|^2 - |c'_i - x_j|^2| over star centroids c_i and
/// nearby atom centres x_j, evaluated in the separable expanded form.
double atom_center_shift(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement,
                         std::span<const Vec3> nearby_atoms);

double solvation_cost(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement,
                      std::span<const Vec3> nearby_atoms, const GbCostParams& params,
                      const Quadric& q1, const Quadric& q2);

struct Placement {
  Vec3 position;
  double cost = 0.0;
};

/// Optional veto applied to each tentative placement (e.g. flip checks).
using PlacementFilter = std::function<bool(const Vec3&)>;

/**
 * Placement and cost for one edge under `kind`. qe and vol minimize their
 * quadratic forms; pb, gb and gb_qe take the cheapest of {midpoint, v1, v2,
 * qe optimum}, ties going to the earlier entry. Candidates that make a star
 * triangle degenerate or fail `filter` are skipped; throws
 * CandidateInfeasible when none remain. For qe and vol the single optimum
 * is subject to the same filter.
 */
Placement placement_for(CostKind kind, const TriangleMesh& mesh, const EdgeStar& star,
                        const Quadric& q1, const Quadric& q2, std::span<const Vec3> nearby_atoms,
                        const GbCostParams& params, const PlacementFilter& filter = {});

/// lambda chosen so both terms of the gb cost have comparable magnitude:
/// median(first term) / median(atom-centre shift) over up to `samples`
/// collapsible edges picked with a fixed seed. Returns `fallback` when the
/// shift median is zero.
double auto_lambda(const TriangleMesh& mesh, std::span<const Vec3> atoms, const GbCostParams& params,
                   int samples = 1000, double fallback = 1e-8);

}  // namespace stablemesh
