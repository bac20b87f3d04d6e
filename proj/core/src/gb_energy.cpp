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

#include "stablemesh/gb_energy.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "stablemesh/error.h"

namespace stablemesh {

std::vector<Vec3> centers(std::span<const Atom> atoms) {
  std::vector<Vec3> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(a.center);
  return out;
}

void GBParams::check() const {
  if (!(eps_p > 0.0) || !(eps_w > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "dielectric constants must be positive");
  }
}

std::string_view to_string(QuadratureOrder order) {
  return order == QuadratureOrder::centroid_1pt ? "centroid_1pt" : "symmetric_3pt";
}

QuadratureOrder parse_quadrature(std::string_view name) {
  if (name == "1pt" || name == "centroid_1pt") return QuadratureOrder::centroid_1pt;
  if (name == "3pt" || name == "symmetric_3pt") return QuadratureOrder::symmetric_3pt;
  throw Error(ErrorCode::InvalidArgument, "unknown quadrature '" + std::string(name) + "'");
}

std::vector<QuadratureNode> quadrature_nodes(const TriangleMesh& mesh, QuadratureOrder order) {
  std::vector<QuadratureNode> nodes;
  const int per = order == QuadratureOrder::centroid_1pt ? 1 : 3;
  nodes.reserve(static_cast<std::size_t>(mesh.num_triangles()) * per);
  for (TriangleId t = 0; t < mesh.triangle_slots(); ++t) {
    if (!mesh.triangle_alive(t)) continue;
    auto [a, b, c] = mesh.corners(t);
    const Vec3 n = triangle_normal(a, b, c);
    const double twice_area = norm(n);
    if (0.5 * twice_area <= kDegenerateArea) continue;
    const Vec3 unit = n / twice_area;
    const double area = 0.5 * twice_area;
    if (order == QuadratureOrder::centroid_1pt) {
      nodes.push_back({(a + b + c) / 3.0, unit, area, t});
    } else {
      // Barycentric (2/3, 1/6, 1/6) and permutations, equal weights.
      constexpr double kMajor = 2.0 / 3.0;
      constexpr double kMinor = 1.0 / 6.0;
      const double w = area / 3.0;
      nodes.push_back({kMajor * a + kMinor * b + kMinor * c, unit, w, t});
      nodes.push_back({kMinor * a + kMajor * b + kMinor * c, unit, w, t});
      nodes.push_back({kMinor * a + kMinor * b + kMajor * c, unit, w, t});
    }
  }
  return nodes;
}

std::vector<double> born_radii(const TriangleMesh& mesh, std::span<const Vec3> atom_centers,
                               QuadratureOrder order) {
  const std::vector<QuadratureNode> nodes = quadrature_nodes(mesh, order);
  std::vector<double> radii(atom_centers.size());
  const double min_d2 = kMinNodeDistance * kMinNodeDistance;
  for (std::size_t i = 0; i < atom_centers.size(); ++i) {
    const Vec3& x = atom_centers[i];
    double sum = 0.0;
    for (const QuadratureNode& node : nodes) {
      const Vec3 r = node.point - x;
      const double d2 = norm2(r);
      if (d2 < min_d2) {
        throw Error(ErrorCode::AtomTooCloseToSurface,
                    "atom " + std::to_string(i) + " lies on a quadrature node of triangle " +
                        std::to_string(node.triangle),
                    static_cast<long>(i));
      }
      sum += node.weight * dot(r, node.normal) / (d2 * d2);
    }
    const double inverse = sum / (4.0 * std::numbers::pi);
    if (!(inverse > 0.0) || !std::isfinite(inverse)) {
      throw Error(ErrorCode::NonPositiveIntegral,
                  "atom " + std::to_string(i) +
                      ": surface integral is not positive (atom outside the surface or "
                      "surface inward-oriented)",
                  static_cast<long>(i));
    }
    radii[i] = 1.0 / inverse;
  }
  return radii;
}

void assign_born_radii(const TriangleMesh& mesh, std::span<Atom> atoms, QuadratureOrder order) {
  const std::vector<Vec3> x = centers(atoms);
  const std::vector<double> radii = born_radii(mesh, x, order);
  for (std::size_t i = 0; i < atoms.size(); ++i) atoms[i].born_radius = radii[i];
}

double polarization_energy(std::span<const Atom> atoms, const GBParams& params) {
  params.check();
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!(atoms[i].born_radius > 0.0)) {
      throw Error(ErrorCode::InvalidRadius,
                  "atom " + std::to_string(i) + " has non-positive Born radius",
                  static_cast<long>(i));
    }
  }
  // Summing in a canonical atom order makes the result independent of the
  // caller's ordering; identical atoms contribute identical terms.
  std::vector<std::size_t> order(atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    const Atom& a = atoms[l];
    const Atom& b = atoms[r];
    return std::tie(a.center.x, a.center.y, a.center.z, a.charge, a.born_radius) <
           std::tie(b.center.x, b.center.y, b.center.z, b.charge, b.born_radius);
  });
  double sum = 0.0;
  for (std::size_t i : order) {
    const Atom& ai = atoms[i];
    double row = 0.0;
    for (std::size_t j : order) {
      const Atom& aj = atoms[j];
      const double r2 = norm2(ai.center - aj.center);
      const double rr = ai.born_radius * aj.born_radius;
      row += ai.charge * aj.charge / std::sqrt(r2 + rr * std::exp(-r2 / (4.0 * rr)));
    }
    sum += row;
  }
  return -0.5 * params.tau() * sum;
}

double surface_area(const TriangleMesh& mesh) {
  double area = 0.0;
  for (TriangleId t = 0; t < mesh.triangle_slots(); ++t) {
    if (!mesh.triangle_alive(t)) continue;
    auto [a, b, c] = mesh.corners(t);
    area += triangle_area(a, b, c);
  }
  return area;
}

double nonpolar_energy(const TriangleMesh& mesh, double gamma) { return gamma * surface_area(mesh); }

}  // namespace stablemesh
