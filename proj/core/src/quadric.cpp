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

#include "stablemesh/quadric.h"

#include <algorithm>
#include <cmath>
#include <optional>

namespace stablemesh {

namespace {

constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 4, 5, 6}, {2, 5, 7, 8}, {3, 6, 8, 9}};

double det3(const double m[3][3]) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

HomogeneousPlane HomogeneousPlane::through(const Vec3& point, const Vec3& normal) {
  const double len = norm(normal);
  if (!(len > 0.0)) return {};
  const Vec3 n = normal / len;
  return {n.x, n.y, n.z, -dot(n, point)};
}

Quadric Quadric::outer(double a, double b, double c, double d, double w) {
  Quadric q;
  q.m_ = {w * a * a, w * a * b, w * a * c, w * a * d, w * b * b,
          w * b * c, w * b * d, w * c * c, w * c * d, w * d * d};
  return q;
}

double Quadric::at(int i, int j) const { return m_[kIndex[i][j]]; }

double Quadric::evaluate(const Vec3& p) const {
  const double x = p.x, y = p.y, z = p.z;
  return m_[0] * x * x + 2.0 * m_[1] * x * y + 2.0 * m_[2] * x * z + 2.0 * m_[3] * x +
         m_[4] * y * y + 2.0 * m_[5] * y * z + 2.0 * m_[6] * y + m_[7] * z * z +
         2.0 * m_[8] * z + m_[9];
}

QuadricPlacement optimal_placement(const Quadric& q, const Vec3& v1, const Vec3& v2) {
  // Discrete fallback set, in tie-break order.
  const Vec3 mid = midpoint(v1, v2);
  QuadricPlacement best{mid, q.evaluate(mid), PlacementMethod::Discrete};
  for (const Vec3& p : {v1, v2}) {
    const double c = q.evaluate(p);
    if (c < best.cost) best = {p, c, PlacementMethod::Discrete};
  }

  const double a[3][3] = {{q.at(0, 0), q.at(0, 1), q.at(0, 2)},
                          {q.at(1, 0), q.at(1, 1), q.at(1, 2)},
                          {q.at(2, 0), q.at(2, 1), q.at(2, 2)}};
  const double rhs[3] = {-q.at(0, 3), -q.at(1, 3), -q.at(2, 3)};

  double row_norm = 0.0;
  for (const auto& row : a) row_norm += std::abs(row[0]) + std::abs(row[1]) + std::abs(row[2]);
  row_norm /= 3.0;

  std::optional<QuadricPlacement> primary;
  const double det = det3(a);
  if (row_norm > 0.0 && std::abs(det) >= 1e-12 * row_norm * row_norm * row_norm) {
    // Cramer's rule; the system is 3x3 and the guard above bounds its conditioning.
    double x[3];
    for (int k = 0; k < 3; ++k) {
      double m[3][3];
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) m[i][j] = (j == k) ? rhs[i] : a[i][j];
      }
      x[k] = det3(m) / det;
    }
    const Vec3 p{x[0], x[1], x[2]};
    if (is_finite(p)) primary = QuadricPlacement{p, q.evaluate(p), PlacementMethod::Solve};
  }

  if (!primary) {
    // f(v1 + t d) = f(v1) + 2 t g.d + t^2 d^T A d, with g = A v1 + b.
    const Vec3 d = v2 - v1;
    const Vec3 ad{a[0][0] * d.x + a[0][1] * d.y + a[0][2] * d.z,
                  a[1][0] * d.x + a[1][1] * d.y + a[1][2] * d.z,
                  a[2][0] * d.x + a[2][1] * d.y + a[2][2] * d.z};
    const double curvature = dot(d, ad);
    const double trace3 = a[0][0] + a[1][1] + a[2][2];
    if (curvature > 1e-12 * trace3 * norm2(d)) {
      const Vec3 g{a[0][0] * v1.x + a[0][1] * v1.y + a[0][2] * v1.z - rhs[0],
                   a[1][0] * v1.x + a[1][1] * v1.y + a[1][2] * v1.z - rhs[1],
                   a[2][0] * v1.x + a[2][1] * v1.y + a[2][2] * v1.z - rhs[2]};
      const double t = std::clamp(-dot(g, d) / curvature, 0.0, 1.0);
      const Vec3 p = v1 + t * d;
      primary = QuadricPlacement{p, q.evaluate(p), PlacementMethod::Segment};
    }
  }

  if (primary && primary->cost <= best.cost) return *primary;
  return best;
}

}  // namespace stablemesh
