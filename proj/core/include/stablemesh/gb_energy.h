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

#include <span>
#include <string_view>
#include <vector>

#include "stablemesh/mesh.h"
#include "stablemesh/vec3.h"

namespace stablemesh {

struct Atom {
  Vec3 center;
  /// Elementary charges.
  double charge = 0.0;
  /// Input van der Waals radius; not used by the surface-integral radii.
  double vdw_radius = 0.0;
  /// Effective Born radius, filled by born_radii(); 0 when unset.
  double born_radius = 0.0;
};

std::vector<Vec3> centers(std::span<const Atom> atoms);

/// e^2/angstrom to kcal/mol.
inline constexpr double kCoulombKcalPerMol = 332.06;

struct GBParams {
  double eps_p = 1.0;
  double eps_w = 80.0;

  double tau() const { return 1.0 / eps_p - 1.0 / eps_w; }
  /// Throws Error(InvalidArgument) unless both dielectrics are positive.
  void check() const;
};

enum class QuadratureOrder { centroid_1pt, symmetric_3pt };

std::string_view to_string(QuadratureOrder order);
/// Accepts "1pt"/"centroid_1pt" and "3pt"/"symmetric_3pt".
QuadratureOrder parse_quadrature(std::string_view name);

struct QuadratureNode {
  Vec3 point;
  /// Outward unit normal of the owning triangle.
  Vec3 normal;
  double weight = 0.0;
  TriangleId triangle = -1;
};

/// Nodes over every live non-degenerate triangle. Weights are positive and
/// sum to each triangle's area; the 3-point rule is exact for quadratics.
std::vector<QuadratureNode> quadrature_nodes(const TriangleMesh& mesh, QuadratureOrder order);

/// Minimum allowed node-to-atom distance (angstroms).
inline constexpr double kMinNodeDistance = 1e-6;

/**
 * Effective Born radii from the surface integral
 *   1/R_i = 1/(4 pi) sum_k w_k (r_k - x_i) . n_k / |r_k - x_i|^4.
 * Throws AtomTooCloseToSurface or NonPositiveIntegral, with the atom index in
 * Error::index().
 */
std::vector<double> born_radii(const TriangleMesh& mesh, std::span<const Vec3> atom_centers,
                               QuadratureOrder order = QuadratureOrder::centroid_1pt);

/// Computes and stores born_radius on each atom.
void assign_born_radii(const TriangleMesh& mesh, std::span<Atom> atoms,
                       QuadratureOrder order = QuadratureOrder::centroid_1pt);

/**
 * Polarization energy -tau/2 sum_{i,j} q_i q_j / sqrt(r^2 + R_i R_j exp(-r^2 / 4 R_i R_j))
 * over all ordered pairs including i = j, in tau * e^2/angstrom. Atoms are
 * visited in a canonical order so the result does not depend on input order.
 * Throws InvalidRadius when a radius is not positive.
 */
double polarization_energy(std::span<const Atom> atoms, const GBParams& params);

double surface_area(const TriangleMesh& mesh);

/// Placeholder non-polar term gamma * area (kcal/mol/angstrom^2 by default).
/// Not a physical model.
inline constexpr double kDefaultSurfaceTension = 0.005;
double nonpolar_energy(const TriangleMesh& mesh, double gamma = kDefaultSurfaceTension);

}  // namespace stablemesh
