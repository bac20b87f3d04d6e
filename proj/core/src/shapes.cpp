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

#include "stablemesh/shapes.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <unordered_map>

#include "stablemesh/error.h"

namespace stablemesh::shapes {

namespace {

const std::vector<Vec3>& icosahedron_vertices() {
  static const std::vector<Vec3> v = [] {
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> p = {{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0},
                           {0, -1, t}, {0, 1, t},  {0, -1, -t}, {0, 1, -t},
                           {t, 0, -1}, {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
    for (Vec3& q : p) q = q / norm(q);
    return p;
  }();
  return v;
}

const std::vector<Triangle>& icosahedron_faces() {
  static const std::vector<Triangle> f = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
      {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
      {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  return f;
}

TriangleMesh on_sphere(std::vector<Vec3> positions, std::vector<Triangle> faces, double radius,
                       const Vec3& center) {
  for (Vec3& p : positions) p = center + p * (radius / norm(p));
  return TriangleMesh(std::move(positions), std::move(faces));
}

}  // namespace

TriangleMesh tetrahedron() {
  return TriangleMesh({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}},
                      {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}});
}

TriangleMesh octahedron() {
  return TriangleMesh({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}},
                      {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
                       {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}});
}

TriangleMesh icosahedron(double radius) {
  return on_sphere(icosahedron_vertices(), icosahedron_faces(), radius, {});
}

TriangleMesh icosphere(int level, double radius, Vec3 center) {
  if (level < 0) throw Error(ErrorCode::InvalidArgument, "icosphere level must be >= 0");
  std::vector<Vec3> positions = icosahedron_vertices();
  std::vector<Triangle> faces = icosahedron_faces();
  for (int l = 0; l < level; ++l) {
    std::unordered_map<std::uint64_t, int> midpoints;
    auto split = [&](int a, int b) {
      const std::uint64_t key = Edge(a, b).key();
      auto it = midpoints.find(key);
      if (it != midpoints.end()) return it->second;
      Vec3 m = midpoint(positions[a], positions[b]);
      positions.push_back(m / norm(m));
      const int id = static_cast<int>(positions.size()) - 1;
      midpoints.emplace(key, id);
      return id;
    };
    std::vector<Triangle> next;
    next.reserve(faces.size() * 4);
    for (const Triangle& f : faces) {
      const int ab = split(f[0], f[1]);
      const int bc = split(f[1], f[2]);
      const int ca = split(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = std::move(next);
  }
  return on_sphere(std::move(positions), std::move(faces), radius, center);
}

TriangleMesh geodesic_sphere(int frequency, double radius, Vec3 center) {
  if (frequency < 1) throw Error(ErrorCode::InvalidArgument, "frequency must be >= 1");
  const std::vector<Vec3>& base = icosahedron_vertices();
  const int n = frequency;

  // A lattice point is identified by its non-zero (corner, weight) pairs so
  // points on shared edges and corners are created once.
  using Key = std::vector<std::pair<int, int>>;
  std::map<Key, int> ids;
  std::vector<Vec3> positions;
  auto point = [&](const Triangle& f, int i, int j, int k) {
    Key key;
    if (i) key.emplace_back(f[0], i);
    if (j) key.emplace_back(f[1], j);
    if (k) key.emplace_back(f[2], k);
    std::sort(key.begin(), key.end());
    auto [it, inserted] = ids.emplace(key, static_cast<int>(positions.size()));
    if (inserted) {
      Vec3 p;
      for (auto [corner, w] : key) p += base[corner] * (static_cast<double>(w) / n);
      positions.push_back(p);
    }
    return it->second;
  };

  std::vector<Triangle> faces;
  faces.reserve(20 * static_cast<std::size_t>(n) * n);
  for (const Triangle& f : icosahedron_faces()) {
    // Rows run from corner 0 (i = n) toward the edge (1, 2).
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col <= row; ++col) {
        const int a = point(f, n - row, row - col, col);
        const int b = point(f, n - row - 1, row + 1 - col, col);
        const int c = point(f, n - row - 1, row - col, col + 1);
        faces.push_back({a, b, c});
        if (col < row) {
          const int d = point(f, n - row, row - col - 1, col + 1);
          faces.push_back({a, c, d});
        }
      }
    }
  }
  return on_sphere(std::move(positions), std::move(faces), radius, center);
}

TriangleMesh bipyramid() {
  return TriangleMesh({{1, 0, 0}, {-0.5, 0.8660254037844386, 0}, {-0.5, -0.8660254037844386, 0},
                       {0, 0, 1}, {0, 0, -1}},
                      {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {1, 0, 4}, {2, 1, 4}, {0, 2, 4}});
}

SyntheticMolecule synthetic_molecule(int atom_count, int level, std::uint64_t seed,
                                     double atom_radius, double surface_radius) {
  if (atom_count < 0) throw Error(ErrorCode::InvalidArgument, "atom_count must be >= 0");
  if (!(surface_radius > atom_radius)) {
    throw Error(ErrorCode::InvalidArgument, "surface must enclose the atom ball");
  }
  SyntheticMolecule mol;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  while (static_cast<int>(mol.atoms.size()) < atom_count) {
    const Vec3 p{unit(rng), unit(rng), unit(rng)};
    if (norm2(p) > 1.0) continue;
    Atom a;
    a.center = p * atom_radius;
    a.charge = unit(rng);
    a.vdw_radius = 1.5;
    mol.atoms.push_back(a);
  }

  mol.surface = icosphere(level, 1.0);
  // Radius grows over directions that point at atoms near the ball's rim.
  const double bulge = 0.25 * (surface_radius - atom_radius);
  for (VertexId v = 0; v < mol.surface.vertex_slots(); ++v) {
    const Vec3 u = mol.surface.position(v);
    double r = surface_radius;
    for (const Atom& a : mol.atoms) {
      const double len = norm(a.center);
      if (len == 0.0) continue;
      const double alignment = dot(u, a.center / len);
      r += bulge * (len / atom_radius) * std::exp(-4.0 * (1.0 - alignment));
    }
    mol.surface.set_position(v, u * r);
  }
  return mol;
}

}  // namespace stablemesh::shapes
