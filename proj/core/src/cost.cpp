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

#include "stablemesh/cost.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "stablemesh/error.h"
#include "stablemesh/grid.h"

namespace stablemesh {

std::string_view to_string(CostKind kind) {
  switch (kind) {
    case CostKind::qe: return "qe";
    case CostKind::vol: return "vol";
    case CostKind::pb: return "pb";
    case CostKind::gb: return "gb";
    case CostKind::gb_qe: return "gb_qe";
  }
  return "unknown";
}

CostKind parse_cost_kind(std::string_view name) {
  for (CostKind k : {CostKind::qe, CostKind::vol, CostKind::pb, CostKind::gb, CostKind::gb_qe}) {
    if (name == to_string(k)) return k;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown cost kind '" + std::string(name) + "'");
}

bool needs_atoms(CostKind kind) { return kind == CostKind::gb || kind == CostKind::gb_qe; }

void GbCostParams::check() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    throw Error(ErrorCode::InvalidArgument, "rho must be positive");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be non-negative");
  }
}

Quadric vertex_quadric(const TriangleMesh& mesh, VertexId v, bool area_weighted) {
  Quadric q;
  int contributing = 0;
  for (TriangleId t : mesh.incident_triangles(v)) {
    auto [a, b, c] = mesh.corners(t);
    const Vec3 n = triangle_normal(a, b, c);
    const double area = 0.5 * norm(n);
    if (area <= kDegenerateArea) continue;
    q += Quadric::from_plane(HomogeneousPlane::through(a, n), area_weighted ? area : 1.0);
    ++contributing;
  }
  if (contributing == 0) {
    throw Error(ErrorCode::IsolatedVertex,
                "vertex " + std::to_string(v) + " has no non-degenerate incident triangle", v);
  }
  return q;
}

double quadric_cost(const Quadric& q1, const Quadric& q2, const Vec3& placement) {
  return (q1 + q2).evaluate(placement);
}

QuadricPlacement qe_optimal_placement(const Quadric& q1, const Quadric& q2, const Vec3& v1,
                                      const Vec3& v2) {
  return optimal_placement(q1 + q2, v1, v2);
}

std::array<double, 4> volume_row(const Vec3& a, const Vec3& b, const Vec3& c) {
  // det[v a b c] over homogeneous columns expands to n . v - n . a.
  const Vec3 n = triangle_normal(a, b, c);
  return {n.x, n.y, n.z, -dot(n, a)};
}

Quadric volume_quadric(const TriangleMesh& mesh, const EdgeStar& star) {
  Quadric q;
  for (TriangleId t : star.all_triangles()) {
    auto [a, b, c] = mesh.corners(t);
    const auto g = volume_row(a, b, c);
    q += Quadric::outer(g[0], g[1], g[2], g[3], 1.0 / 36.0);
  }
  return q;
}

double volume_cost(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement) {
  return volume_quadric(mesh, star).evaluate(placement);
}

namespace {

// Corners of a star triangle with `moved` relocated to `placement`, mesh order.
std::array<Vec3, 3> moved_corners(const TriangleMesh& mesh, const StarTriangle& s, VertexId moved,
                                  const Vec3& placement) {
  std::array<Vec3, 3> p = mesh.corners(s.id);
  for (int i = 0; i < 3; ++i) {
    if (s.vertices[i] == moved) p[i] = placement;
  }
  return p;
}

// c' for a fan triangle (center, ring[k], ring[k + 1]), summed in the same
// order as StarTriangle::centroid so an unmoved vertex reproduces it exactly.
Vec3 moved_centroid(const TriangleMesh& mesh, const std::vector<VertexId>& ring, std::size_t k,
                    const Vec3& placement) {
  return (placement + mesh.position(ring[k]) + mesh.position(ring[k + 1])) / 3.0;
}

}  // namespace

double quality_cost(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement) {
  double total = 0.0;
  auto accumulate = [&](const std::vector<StarTriangle>& fan, VertexId moved) {
    for (const StarTriangle& s : fan) {
      auto before = mesh.corners(s.id);
      auto after = moved_corners(mesh, s, moved, placement);
      total += triangle_quality(after[0], after[1], after[2]) -
               triangle_quality(before[0], before[1], before[2]);
    }
  };
  accumulate(star.upper, star.v2);
  accumulate(star.lower, star.v1);
  return total;
}

CentroidShift centroid_shift(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement) {
  CentroidShift shift;
  shift.before.reserve(star.upper.size() + star.lower.size());
  shift.after.reserve(star.upper.size() + star.lower.size());
  for (std::size_t u = 0; u < star.upper.size(); ++u) {
    shift.before.push_back(star.upper[u].centroid);
    shift.after.push_back(moved_centroid(mesh, star.upper_ring, u, placement));
  }
  for (std::size_t d = 0; d < star.lower.size(); ++d) {
    shift.before.push_back(star.lower[d].centroid);
    shift.after.push_back(moved_centroid(mesh, star.lower_ring, d, placement));
  }
  return shift;
}

double atom_center_shift(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement,
                         std::span<const Vec3> nearby_atoms) {
  if (nearby_atoms.empty()) return 0.0;
  // sum_{i,j} c_i.c_i - c'_i.c'_i + 2 (c'_i - c_i).x_j
  //   = M sum_i (|c_i|^2 - |c'_i|^2) + 2 (sum_i c'_i - c_i) . (sum_j x_j)
  double square_change = 0.0;
  Vec3 centroid_change;
  auto add = [&](const Vec3& c, const Vec3& c_new) {
    square_change += norm2(c) - norm2(c_new);
    centroid_change += c_new - c;
  };
  for (std::size_t u = 0; u < star.upper.size(); ++u) {
    add(star.upper[u].centroid, moved_centroid(mesh, star.upper_ring, u, placement));
  }
  for (std::size_t d = 0; d < star.lower.size(); ++d) {
    add(star.lower[d].centroid, moved_centroid(mesh, star.lower_ring, d, placement));
  }
  Vec3 atom_sum;
  for (const Vec3& x : nearby_atoms) atom_sum += x;
  const double m = static_cast<double>(nearby_atoms.size());
  return std::abs(m * square_change + 2.0 * dot(centroid_change, atom_sum));
}

double solvation_cost(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement,
                      std::span<const Vec3> nearby_atoms, const GbCostParams& params,
                      const Quadric& q1, const Quadric& q2) {
  const double first = params.variant == GbVariant::edge_length
                           ? distance(mesh.position(star.v1), mesh.position(star.v2))
                           : quadric_cost(q1, q2, placement);
  if (params.lambda == 0.0) return first;
  return first + params.lambda * atom_center_shift(mesh, star, placement, nearby_atoms);
}

Placement placement_for(CostKind kind, const TriangleMesh& mesh, const EdgeStar& star,
                        const Quadric& q1, const Quadric& q2, std::span<const Vec3> nearby_atoms,
                        const GbCostParams& params, const PlacementFilter& filter) {
  const Vec3& p1 = mesh.position(star.v1);
  const Vec3& p2 = mesh.position(star.v2);
  auto accepted = [&](const Vec3& p) { return is_finite(p) && (!filter || filter(p)); };
  auto infeasible = [&]() {
    return Error(ErrorCode::CandidateInfeasible,
                 "no admissible placement for edge (" + std::to_string(star.v1) + ", " +
                     std::to_string(star.v2) + ")");
  };

  if (kind == CostKind::qe || kind == CostKind::vol) {
    const QuadricPlacement best = kind == CostKind::qe
                                      ? qe_optimal_placement(q1, q2, p1, p2)
                                      : optimal_placement(volume_quadric(mesh, star), p1, p2);
    if (!accepted(best.position)) throw infeasible();
    return {best.position, best.cost};
  }

  GbCostParams gb = params;
  if (kind == CostKind::gb_qe) gb.variant = GbVariant::qe_term;

  const Vec3 candidates[4] = {midpoint(p1, p2), p1, p2,
                              qe_optimal_placement(q1, q2, p1, p2).position};
  std::optional<Placement> best;
  for (const Vec3& p : candidates) {
    if (!accepted(p)) continue;
    double cost = 0.0;
    if (kind == CostKind::pb) {
      try {
        cost = quality_cost(mesh, star, p);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateTriangle) continue;
        throw;
      }
    } else {
      cost = solvation_cost(mesh, star, p, nearby_atoms, gb, q1, q2);
    }
    if (!std::isfinite(cost)) continue;
    if (!best || cost < best->cost) best = Placement{p, cost};
  }
  if (!best) throw infeasible();
  return *best;
}

double auto_lambda(const TriangleMesh& mesh, std::span<const Vec3> atoms, const GbCostParams& params,
                   int samples, double fallback) {
  params.check();
  std::vector<Edge> edges = mesh.edges();
  if (edges.empty() || samples <= 0) return fallback;
  std::mt19937_64 rng(0x5eed);
  std::shuffle(edges.begin(), edges.end(), rng);

  UniformGrid grid(atoms, params.rho);
  std::vector<Vec3> nearby;
  std::vector<double> first_terms;
  std::vector<double> shifts;
  for (const Edge& e : edges) {
    if (static_cast<int>(first_terms.size()) >= samples) break;
    EdgeStar star;
    try {
      star = edge_star(mesh, e.a, e.b);
    } catch (const Error&) {
      continue;
    }
    const Quadric q1 = vertex_quadric(mesh, e.a);
    const Quadric q2 = vertex_quadric(mesh, e.b);
    const Vec3& p1 = mesh.position(e.a);
    const Vec3& p2 = mesh.position(e.b);
    const QuadricPlacement opt = qe_optimal_placement(q1, q2, p1, p2);
    nearby.clear();
    for (int id : grid.query_edge(p1, p2, params.rho)) nearby.push_back(grid.point(id));
    first_terms.push_back(params.variant == GbVariant::edge_length ? distance(p1, p2) : opt.cost);
    shifts.push_back(atom_center_shift(mesh, star, opt.position, nearby));
  }
  auto median = [](std::vector<double>& v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };
  if (shifts.empty()) return fallback;
  const double shift_median = median(shifts);
  if (!(shift_median > 0.0)) return fallback;
  return median(first_terms) / shift_median;
}

}  // namespace stablemesh
