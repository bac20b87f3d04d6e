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

#include "stablemesh/mesh.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "stablemesh/error.h"

namespace stablemesh {

namespace {

void erase_value(std::vector<TriangleId>& list, TriangleId t) {
  auto it = std::find(list.begin(), list.end(), t);
  if (it != list.end()) list.erase(it);
}

bool contains(const Triangle& tri, VertexId v) {
  return tri[0] == v || tri[1] == v || tri[2] == v;
}

// True if the triangle traverses the directed edge from -> to.
bool has_directed_edge(const Triangle& tri, VertexId from, VertexId to) {
  for (int i = 0; i < 3; ++i) {
    if (tri[i] == from && tri[(i + 1) % 3] == to) return true;
  }
  return false;
}

VertexId third_vertex(const Triangle& tri, VertexId a, VertexId b) {
  for (VertexId v : tri) {
    if (v != a && v != b) return v;
  }
  return -1;
}

Triangle sorted(Triangle tri) {
  std::sort(tri.begin(), tri.end());
  return tri;
}

std::string edge_name(VertexId a, VertexId b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

TriangleMesh::TriangleMesh(std::vector<Vec3> positions, std::vector<Triangle> triangles)
    : positions_(std::move(positions)),
      triangles_(std::move(triangles)),
      vertex_triangles_(positions_.size()),
      vertex_alive_(positions_.size(), true),
      triangle_alive_(triangles_.size(), true),
      live_vertices_(static_cast<int>(positions_.size())),
      live_triangles_(static_cast<int>(triangles_.size())) {
  const int n = vertex_slots();
  for (TriangleId t = 0; t < triangle_slots(); ++t) {
    for (VertexId v : triangles_[t]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "triangle " + std::to_string(t) + " references vertex " + std::to_string(v),
                    t);
      }
    }
    // A repeated corner is kept (validate reports it) but listed once.
    const Triangle& tri = triangles_[t];
    vertex_triangles_[tri[0]].push_back(t);
    if (tri[1] != tri[0]) vertex_triangles_[tri[1]].push_back(t);
    if (tri[2] != tri[0] && tri[2] != tri[1]) vertex_triangles_[tri[2]].push_back(t);
  }
}

std::array<Vec3, 3> TriangleMesh::corners(TriangleId t) const {
  const Triangle& tri = triangles_[t];
  return {positions_[tri[0]], positions_[tri[1]], positions_[tri[2]]};
}

std::vector<VertexId> TriangleMesh::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(2 * vertex_triangles_[v].size());
  for (TriangleId t : vertex_triangles_[v]) {
    for (VertexId u : triangles_[t]) {
      if (u != v) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TriangleId> TriangleMesh::edge_triangles(VertexId a, VertexId b) const {
  std::vector<TriangleId> out;
  if (a == b) return out;
  for (TriangleId t : vertex_triangles_[a]) {
    if (contains(triangles_[t], b)) out.push_back(t);
  }
  return out;
}

bool TriangleMesh::is_edge(VertexId a, VertexId b) const {
  if (a == b || a < 0 || b < 0 || a >= vertex_slots() || b >= vertex_slots()) return false;
  if (!vertex_alive_[a] || !vertex_alive_[b]) return false;
  for (TriangleId t : vertex_triangles_[a]) {
    if (contains(triangles_[t], b)) return true;
  }
  return false;
}

std::vector<Edge> TriangleMesh::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(live_triangles_) * 3);
  for (TriangleId t = 0; t < triangle_slots(); ++t) {
    if (!triangle_alive_[t]) continue;
    const Triangle& tri = triangles_[t];
    for (int i = 0; i < 3; ++i) {
      if (tri[i] != tri[(i + 1) % 3]) out.emplace_back(tri[i], tri[(i + 1) % 3]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TriangleId> TriangleMesh::live_triangles() const {
  std::vector<TriangleId> out;
  out.reserve(live_triangles_);
  for (TriangleId t = 0; t < triangle_slots(); ++t) {
    if (triangle_alive_[t]) out.push_back(t);
  }
  return out;
}

std::pair<std::vector<Vec3>, std::vector<Triangle>> TriangleMesh::compact() const {
  std::vector<int> remap(positions_.size(), -1);
  std::vector<Vec3> positions;
  positions.reserve(live_vertices_);
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (!vertex_alive_[v]) continue;
    remap[v] = static_cast<int>(positions.size());
    positions.push_back(positions_[v]);
  }
  std::vector<Triangle> triangles;
  triangles.reserve(live_triangles_);
  for (TriangleId t = 0; t < triangle_slots(); ++t) {
    if (!triangle_alive_[t]) continue;
    const Triangle& tri = triangles_[t];
    triangles.push_back({remap[tri[0]], remap[tri[1]], remap[tri[2]]});
  }
  return {std::move(positions), std::move(triangles)};
}

void TriangleMesh::retire_triangle(TriangleId t) {
  if (!triangle_alive_[t]) return;
  for (VertexId v : triangles_[t]) erase_value(vertex_triangles_[v], t);
  triangle_alive_[t] = false;
  --live_triangles_;
}

void TriangleMesh::retire_vertex(VertexId v) {
  if (!vertex_alive_[v]) return;
  vertex_triangles_[v].clear();
  vertex_triangles_[v].shrink_to_fit();
  vertex_alive_[v] = false;
  --live_vertices_;
}

void TriangleMesh::replace_corner(TriangleId t, VertexId from, VertexId to) {
  for (VertexId& v : triangles_[t]) {
    if (v == from) v = to;
  }
  erase_value(vertex_triangles_[from], t);
  vertex_triangles_[to].push_back(t);
}

MeshStats validate(const TriangleMesh& mesh) {
  struct HalfEdge {
    std::uint64_t key;
    VertexId from;
    TriangleId tri;
  };

  MeshStats stats;
  std::vector<HalfEdge> half_edges;
  std::vector<Triangle> keys;
  half_edges.reserve(static_cast<std::size_t>(mesh.num_triangles()) * 3);
  keys.reserve(mesh.num_triangles());

  for (TriangleId t = 0; t < mesh.triangle_slots(); ++t) {
    if (!mesh.triangle_alive(t)) continue;
    const Triangle& tri = mesh.triangle(t);
    for (VertexId v : tri) {
      if (v < 0 || v >= mesh.vertex_slots() || !mesh.vertex_alive(v)) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "triangle " + std::to_string(t) + " references missing vertex " +
                        std::to_string(v),
                    t);
      }
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
      throw Error(ErrorCode::DegenerateTriangle,
                  "triangle " + std::to_string(t) + " repeats a vertex", t);
    }
    keys.push_back(sorted(tri));
    for (int i = 0; i < 3; ++i) {
      half_edges.push_back({Edge(tri[i], tri[(i + 1) % 3]).key(), tri[i], t});
    }
  }
  stats.faces = static_cast<int>(keys.size());

  std::sort(keys.begin(), keys.end());
  auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) {
    throw Error(ErrorCode::DuplicateTriangle,
                "two triangles share vertices " + std::to_string((*dup)[0]) + ", " +
                    std::to_string((*dup)[1]) + ", " + std::to_string((*dup)[2]));
  }

  std::sort(half_edges.begin(), half_edges.end(), [](const HalfEdge& l, const HalfEdge& r) {
    return l.key != r.key ? l.key < r.key : l.tri < r.tri;
  });
  for (std::size_t i = 0; i < half_edges.size();) {
    std::size_t j = i;
    while (j < half_edges.size() && half_edges[j].key == half_edges[i].key) ++j;
    const VertexId a = static_cast<VertexId>(half_edges[i].key >> 32);
    const VertexId b = static_cast<VertexId>(half_edges[i].key & 0xffffffffu);
    if (j - i != 2) {
      throw Error(ErrorCode::NonManifoldEdge,
                  "edge " + edge_name(a, b) + " has " + std::to_string(j - i) +
                      " incident triangles",
                  half_edges[i].tri);
    }
    if (half_edges[i].from == half_edges[i + 1].from) {
      throw Error(ErrorCode::InconsistentOrientation,
                  "edge " + edge_name(a, b) + " is traversed twice in the same direction",
                  half_edges[i].tri);
    }
    ++stats.edges;
    i = j;
  }

  // Each vertex link must be one cycle; this rejects pinched (bowtie) vertices
  // that pass the edge test.
  std::vector<std::pair<VertexId, VertexId>> link;
  for (VertexId v = 0; v < mesh.vertex_slots(); ++v) {
    if (!mesh.vertex_alive(v)) continue;
    ++stats.vertices;
    auto incident = mesh.incident_triangles(v);
    if (incident.empty()) {
      ++stats.unreferenced_vertices;
      continue;
    }
    link.clear();
    for (TriangleId t : incident) {
      const Triangle& tri = mesh.triangle(t);
      for (int i = 0; i < 3; ++i) {
        if (tri[i] == v) link.emplace_back(tri[(i + 1) % 3], tri[(i + 2) % 3]);
      }
    }
    std::sort(link.begin(), link.end());
    VertexId start = link.front().first;
    VertexId current = start;
    std::size_t steps = 0;
    do {
      auto it = std::lower_bound(link.begin(), link.end(), std::make_pair(current, -1));
      if (it == link.end() || it->first != current) break;
      current = it->second;
      ++steps;
    } while (current != start && steps <= link.size());
    if (current != start || steps != link.size()) {
      throw Error(ErrorCode::NonManifoldVertex,
                  "vertex " + std::to_string(v) + " does not have a single disk neighborhood", v);
    }
  }

  stats.euler_characteristic = stats.vertices - stats.edges + stats.faces;
  stats.is_closed_manifold = true;
  return stats;
}

std::vector<TriangleId> EdgeStar::all_triangles() const {
  std::vector<TriangleId> out;
  out.reserve(2 + upper.size() + lower.size());
  out.push_back(left_triangle);
  out.push_back(right_triangle);
  for (const StarTriangle& s : upper) out.push_back(s.id);
  for (const StarTriangle& s : lower) out.push_back(s.id);
  return out;
}

namespace {

// Walks the fan around `center` from `start` (entered through `start_tri`)
// until `stop` is reached, filling the ring and the triangles between
// consecutive ring vertices.
void walk_fan(const TriangleMesh& mesh, VertexId center, VertexId other, VertexId start,
              TriangleId start_tri, VertexId stop, std::vector<VertexId>& ring,
              std::vector<StarTriangle>& fan) {
  auto incident = mesh.incident_triangles(center);
  const Vec3& pc = mesh.position(center);
  ring.reserve(incident.size() + 1);
  fan.reserve(incident.size());
  ring.push_back(start);
  VertexId current = start;
  TriangleId previous = start_tri;
  while (current != stop) {
    TriangleId next_tri = -1;
    int found = 0;
    for (TriangleId t : incident) {
      if (t != previous && contains(mesh.triangle(t), current)) {
        next_tri = t;
        ++found;
      }
    }
    if (found != 1 || fan.size() >= incident.size()) {
      throw Error(ErrorCode::StarNotDisk,
                  "fan around vertex " + std::to_string(center) + " is not a disk", center);
    }
    const Triangle& tri = mesh.triangle(next_tri);
    VertexId next = third_vertex(tri, center, current);
    if (next == other || std::find(ring.begin(), ring.end(), next) != ring.end()) {
      throw Error(ErrorCode::StarNotDisk,
                  "ring around vertex " + std::to_string(center) + " is not a simple path",
                  center);
    }
    fan.push_back({next_tri, tri, (pc + mesh.position(current) + mesh.position(next)) / 3.0});
    ring.push_back(next);
    previous = next_tri;
    current = next;
  }
}

}  // namespace

EdgeStar edge_star(const TriangleMesh& mesh, VertexId v1, VertexId v2) {
  if (!mesh.is_edge(v1, v2)) {
    throw Error(ErrorCode::NotAnEdge, edge_name(v1, v2) + " is not a mesh edge");
  }
  std::vector<TriangleId> shared = mesh.edge_triangles(v1, v2);
  if (shared.size() != 2) {
    throw Error(ErrorCode::StarNotDisk,
                "edge " + edge_name(v1, v2) + " has " + std::to_string(shared.size()) +
                    " incident triangles");
  }
  EdgeStar star;
  star.v1 = v1;
  star.v2 = v2;
  const bool first_is_left = has_directed_edge(mesh.triangle(shared[0]), v1, v2);
  const bool second_is_left = has_directed_edge(mesh.triangle(shared[1]), v1, v2);
  if (first_is_left == second_is_left) {
    throw Error(ErrorCode::StarNotDisk, "edge " + edge_name(v1, v2) + " is inconsistently oriented");
  }
  star.left_triangle = first_is_left ? shared[0] : shared[1];
  star.right_triangle = first_is_left ? shared[1] : shared[0];
  star.left = third_vertex(mesh.triangle(star.left_triangle), v1, v2);
  star.right = third_vertex(mesh.triangle(star.right_triangle), v1, v2);

  walk_fan(mesh, v2, v1, star.left, star.left_triangle, star.right, star.upper_ring, star.upper);
  walk_fan(mesh, v1, v2, star.left, star.left_triangle, star.right, star.lower_ring, star.lower);

  // The two fans plus the edge triangles must cover the whole star.
  const std::size_t incident =
      mesh.incident_triangles(v1).size() + mesh.incident_triangles(v2).size() - 2;
  if (star.upper.size() + star.lower.size() + 2 != incident) {
    throw Error(ErrorCode::StarNotDisk,
                "star of edge " + edge_name(v1, v2) + " is not a pair of disks");
  }
  return star;
}

std::string_view to_string(CollapseVerdict verdict) {
  switch (verdict) {
    case CollapseVerdict::Ok: return "ok";
    case CollapseVerdict::NotAnEdge: return "not_an_edge";
    case CollapseVerdict::StarNotDisk: return "star_not_disk";
    case CollapseVerdict::TooFewVertices: return "too_few_vertices";
    case CollapseVerdict::WingsCoincide: return "wings_coincide";
    case CollapseVerdict::DuplicateTriangle: return "duplicate_triangle";
    case CollapseVerdict::LinkCondition: return "link_condition";
  }
  return "unknown";
}

CollapseCheck can_collapse(const TriangleMesh& mesh, const EdgeStar& star) {
  if (mesh.num_vertices() - 1 < 4) return {CollapseVerdict::TooFewVertices};
  if (star.left == star.right) return {CollapseVerdict::WingsCoincide};

  std::vector<Triangle> after;
  after.reserve(star.upper.size() + star.lower.size());
  for (const StarTriangle& s : star.upper) {
    Triangle tri = s.vertices;
    for (VertexId& v : tri) {
      if (v == star.v2) v = star.v1;
    }
    after.push_back(sorted(tri));
  }
  for (const StarTriangle& s : star.lower) after.push_back(sorted(s.vertices));
  std::sort(after.begin(), after.end());
  if (std::adjacent_find(after.begin(), after.end()) != after.end()) {
    return {CollapseVerdict::DuplicateTriangle};
  }

  // Common neighbors of v1 and v2 must be exactly the two wings. Rings are
  // short, so a quadratic scan beats sorting.
  for (std::size_t i = 1; i + 1 < star.upper_ring.size(); ++i) {
    VertexId u = star.upper_ring[i];
    if (std::find(star.lower_ring.begin(), star.lower_ring.end(), u) != star.lower_ring.end()) {
      return {CollapseVerdict::LinkCondition};
    }
  }
  return {CollapseVerdict::Ok};
}

CollapseCheck can_collapse(const TriangleMesh& mesh, VertexId v1, VertexId v2) {
  try {
    return can_collapse(mesh, edge_star(mesh, v1, v2));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotAnEdge) return {CollapseVerdict::NotAnEdge};
    if (e.code() == ErrorCode::StarNotDisk) return {CollapseVerdict::StarNotDisk};
    throw;
  }
}

RingCheck check_ring(const TriangleMesh& mesh, const EdgeStar& star, const Vec3& placement) {
  RingCheck check;
  auto inspect = [&](const StarTriangle& s, VertexId moved) {
    std::array<Vec3, 3> p = mesh.corners(s.id);
    const Vec3 before = triangle_normal(p[0], p[1], p[2]);
    for (int i = 0; i < 3; ++i) {
      if (s.vertices[i] == moved) p[i] = placement;
    }
    const Vec3 after = triangle_normal(p[0], p[1], p[2]);
    if (0.5 * norm(after) <= kDegenerateArea) {
      check.degenerate.push_back(s.id);
    } else if (dot(before, after) < 0.0) {
      check.flipped.push_back(s.id);
    }
  };
  for (const StarTriangle& s : star.upper) inspect(s, star.v2);
  for (const StarTriangle& s : star.lower) inspect(s, star.v1);
  return check;
}

CollapseRecord collapse_edge(TriangleMesh& mesh, VertexId v1, VertexId v2, const Vec3& placement) {
  EdgeStar star;
  try {
    star = edge_star(mesh, v1, v2);
  } catch (const Error& e) {
    throw Error(ErrorCode::CollapseRejected, e.what());
  }
  CollapseCheck check = can_collapse(mesh, star);
  if (!check) {
    throw Error(ErrorCode::CollapseRejected,
                "edge " + edge_name(v1, v2) + ": " + std::string(to_string(check.verdict)));
  }
  if (!is_finite(placement)) {
    throw Error(ErrorCode::CollapseRejected, "placement is not finite");
  }

  CollapseRecord record;
  record.survivor = v1;
  record.retired = v2;
  record.placement = placement;
  record.removed_triangles = {star.left_triangle, star.right_triangle};
  record.flipped = check_ring(mesh, star, placement).flipped;

  mesh.retire_triangle(star.left_triangle);
  mesh.retire_triangle(star.right_triangle);
  for (const StarTriangle& s : star.upper) mesh.replace_corner(s.id, v2, v1);
  mesh.retire_vertex(v2);
  mesh.set_position(v1, placement);
  return record;
}

}  // namespace stablemesh
