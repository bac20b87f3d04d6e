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

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "stablemesh/vec3.h"

namespace stablemesh {

using VertexId = int;
using TriangleId = int;
using Triangle = std::array<VertexId, 3>;

/// Undirected edge stored with the smaller id first.
struct Edge {
  VertexId a = -1;
  VertexId b = -1;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  std::uint64_t key() const {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Area below which a triangle is treated as degenerate (square angstroms).
inline constexpr double kDegenerateArea = 1e-12;

/**
 * Indexed, consistently oriented triangle surface with vertex-to-triangle
 * adjacency. Counter-clockwise triangles give outward normals.
 *
 * Edge collapses retire vertex and triangle slots instead of erasing them so
 * ids held by a priority queue stay stable; compact() drops the retired slots.
 * Construction does not validate; call validate() for the closed-manifold
 * check.
 */
class TriangleMesh {
 public:
  TriangleMesh() = default;
  TriangleMesh(std::vector<Vec3> positions, std::vector<Triangle> triangles);

  /// Slot counts, including retired slots.
  int vertex_slots() const { return static_cast<int>(positions_.size()); }
  int triangle_slots() const { return static_cast<int>(triangles_.size()); }

  /// Live element counts.
  int num_vertices() const { return live_vertices_; }
  int num_triangles() const { return live_triangles_; }

  bool vertex_alive(VertexId v) const { return vertex_alive_[v]; }
  bool triangle_alive(TriangleId t) const { return triangle_alive_[t]; }

  const Vec3& position(VertexId v) const { return positions_[v]; }
  void set_position(VertexId v, const Vec3& p) { positions_[v] = p; }
  std::span<const Vec3> positions() const { return positions_; }

  const Triangle& triangle(TriangleId t) const { return triangles_[t]; }
  std::array<Vec3, 3> corners(TriangleId t) const;

  /// Live triangles incident to v, in insertion order.
  std::span<const TriangleId> incident_triangles(VertexId v) const {
    return vertex_triangles_[v];
  }

  /// Distinct vertices sharing a live triangle with v, sorted ascending.
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Live triangles containing both a and b.
  std::vector<TriangleId> edge_triangles(VertexId a, VertexId b) const;
  bool is_edge(VertexId a, VertexId b) const;

  /// All live undirected edges, sorted.
  std::vector<Edge> edges() const;

  /// Live triangle ids in ascending order.
  std::vector<TriangleId> live_triangles() const;

  /// Copies of the live geometry with retired slots removed. Vertex order is
  /// preserved among survivors.
  std::pair<std::vector<Vec3>, std::vector<Triangle>> compact() const;

  /// Bookkeeping for collapse_edge; not for general use.
  void retire_triangle(TriangleId t);
  void retire_vertex(VertexId v);
  void replace_corner(TriangleId t, VertexId from, VertexId to);

 private:
  std::vector<Vec3> positions_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<TriangleId>> vertex_triangles_;
  std::vector<bool> vertex_alive_;
  std::vector<bool> triangle_alive_;
  int live_vertices_ = 0;
  int live_triangles_ = 0;
};

struct MeshStats {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  bool is_closed_manifold = false;
  /// Live vertex slots not used by any triangle. Reported, not fatal.
  int unreferenced_vertices = 0;
};

/// Checks every closed-manifold invariant and throws Error on the first
/// violation (NonManifoldEdge, DuplicateTriangle, DegenerateTriangle,
/// InconsistentOrientation, IndexOutOfRange).
MeshStats validate(const TriangleMesh& mesh);

/// A triangle of an edge star, listed with its mesh orientation.
struct StarTriangle {
  TriangleId id = -1;
  Triangle vertices{};
  Vec3 centroid;
};

/**
 * Labeled neighborhood of the edge (v1, v2). With the edge drawn vertically
 * and v1 at the bottom, `left` is the wing vertex of the triangle traversing
 * v1 -> v2 and `right` the wing of the triangle traversing v2 -> v1.
 *
 * upper_ring runs vL = v2^0, v2^1, ..., v2^{U+1} = vR around v2 and
 * lower_ring runs vL = v1^0, ..., v1^{D+1} = vR around v1. upper[u] is the
 * triangle (v2, v2^u, v2^{u+1}) and lower[d] is (v1, v1^d, v1^{d+1}).
 */
struct EdgeStar {
  VertexId v1 = -1;
  VertexId v2 = -1;
  VertexId left = -1;
  VertexId right = -1;
  TriangleId left_triangle = -1;
  TriangleId right_triangle = -1;
  std::vector<VertexId> upper_ring;
  std::vector<VertexId> lower_ring;
  std::vector<StarTriangle> upper;
  std::vector<StarTriangle> lower;

  int upper_count() const { return static_cast<int>(upper_ring.size()) - 2; }
  int lower_count() const { return static_cast<int>(lower_ring.size()) - 2; }

  /// Every triangle incident to v1 or v2: the two edge triangles first, then
  /// upper, then lower.
  std::vector<TriangleId> all_triangles() const;
};

/// Throws NotAnEdge or StarNotDisk.
EdgeStar edge_star(const TriangleMesh& mesh, VertexId v1, VertexId v2);

enum class CollapseVerdict {
  Ok,
  NotAnEdge,
  StarNotDisk,
  TooFewVertices,
  WingsCoincide,
  DuplicateTriangle,
  LinkCondition,
};

std::string_view to_string(CollapseVerdict verdict);

struct CollapseCheck {
  CollapseVerdict verdict = CollapseVerdict::Ok;
  explicit operator bool() const { return verdict == CollapseVerdict::Ok; }
};

/// Legality of collapsing (v1, v2): at least 4 vertices remain, the wings are
/// distinct, no duplicate triangle appears and the link condition holds.
CollapseCheck can_collapse(const TriangleMesh& mesh, VertexId v1, VertexId v2);
/// Same check reusing an already computed star.
CollapseCheck can_collapse(const TriangleMesh& mesh, const EdgeStar& star);

/// Ring triangles whose orientation would reverse, or which would become
/// degenerate, if v1 and v2 moved to `placement`.
struct RingCheck {
  std::vector<TriangleId> flipped;
  std::vector<TriangleId> degenerate;
  bool ok() const { return flipped.empty() && degenerate.empty(); }
};

RingCheck check_ring(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement);

struct CollapseRecord {
  VertexId survivor = -1;
  VertexId retired = -1;
  Vec3 placement;
  std::array<TriangleId, 2> removed_triangles{-1, -1};
  /// Triangles whose normal reversed. The collapse is applied regardless.
  std::vector<TriangleId> flipped;
};

/// Collapses (v1, v2) to `placement`. v1 survives and v2's slot is retired.
/// Throws CollapseRejected if can_collapse fails.
CollapseRecord collapse_edge(TriangleMesh& mesh, VertexId v1, VertexId v2, const Vec3& placement);

struct TriangleMetrics {
  /// longest/shortest side + largest/smallest angle; 2 for equilateral.
  double quality = 0.0;
  double area = 0.0;
  Vec3 centroid;
  Vec3 circumcenter;
  Vec3 barycenter;
  bool well_centered = false;
  /// |barycenter - circumcenter|
  double center_offset = 0.0;
};

/// Throws DegenerateTriangle when the area is at most kDegenerateArea.
TriangleMetrics triangle_metrics(const Vec3& a, const Vec3& b, const Vec3& c);
TriangleMetrics triangle_metrics(const TriangleMesh& mesh, TriangleId t);

/// Quality term alone; throws DegenerateTriangle like triangle_metrics.
double triangle_quality(const Vec3& a, const Vec3& b, const Vec3& c);

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c);
/// Unnormalized normal (b - a) x (c - a); its length is twice the area.
Vec3 triangle_normal(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace stablemesh
