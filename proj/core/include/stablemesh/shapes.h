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
#include <vector>

#include "stablemesh/gb_energy.h"
#include "stablemesh/mesh.h"

namespace stablemesh::shapes {

/// Closed, outward-oriented test surfaces.
TriangleMesh tetrahedron();
TriangleMesh octahedron();
TriangleMesh icosahedron(double radius = 1.0);

/// Icosahedron subdivided `level` times (20 * 4^level faces), projected to a
/// sphere of the given radius and centre.
TriangleMesh icosphere(int level, double radius = 1.0, Vec3 center = {});

/// Class-I geodesic sphere: each icosahedron face split into frequency^2
/// triangles (20 * frequency^2 faces).
TriangleMesh geodesic_sphere(int frequency, double radius = 1.0, Vec3 center = {});

/// Triangular bipyramid: two tetrahedra glued on the face (0, 1, 2).
TriangleMesh bipyramid();

struct SyntheticMolecule {
  TriangleMesh surface;
  std::vector<Atom> atoms;
};

/**
 * `atom_count` atoms uniformly in a ball of radius `atom_radius` with charges
 * in [-1, 1], wrapped by an icosphere of radius `surface_radius` that bulges
 * smoothly over the atoms. The surface stays star-shaped about the origin,
 * so every atom is strictly inside.
 */
SyntheticMolecule synthetic_molecule(int atom_count, int level, std::uint64_t seed = 7,
                                     double atom_radius = 4.0, double surface_radius = 8.0);

}  // namespace stablemesh::shapes
