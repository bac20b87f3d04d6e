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

#include <algorithm>
#include <cmath>
#include <string>

#include "stablemesh/error.h"
#include "stablemesh/mesh.h"

namespace stablemesh {

namespace {

// Interior angle at the corner where edges u and v meet.
double corner_angle(const Vec3& u, const Vec3& v) { return std::atan2(norm(cross(u, v)), dot(u, v)); }

// Cosine strictly positive, with a relative guard so right angles built from
// rounded coordinates do not count as acute.
bool acute(const Vec3& u, const Vec3& v) { return dot(u, v) > 1e-12 * norm(u) * norm(v); }

}  // namespace

Vec3 triangle_normal(const Vec3& a, const Vec3& b, const Vec3& c) { return cross(b - a, c - a); }

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
  return 0.5 * norm(triangle_normal(a, b, c));
}

double triangle_quality(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 ab = b - a;
  const Vec3 bc = c - b;
  const Vec3 ca = a - c;
  if (0.5 * norm(cross(ab, -ca)) <= kDegenerateArea) {
    throw Error(ErrorCode::DegenerateTriangle, "triangle area below tolerance");
  }
  const double la = norm(ab), lb = norm(bc), lc = norm(ca);
  const double longest = std::max({la, lb, lc});
  const double shortest = std::min({la, lb, lc});
  const double alpha = corner_angle(ab, -ca);
  const double beta = corner_angle(bc, -ab);
  const double gamma = corner_angle(ca, -bc);
  const double largest = std::max({alpha, beta, gamma});
  const double smallest = std::min({alpha, beta, gamma});
  return longest / shortest + largest / smallest;
}

TriangleMetrics triangle_metrics(const Vec3& a, const Vec3& b, const Vec3& c) {
  TriangleMetrics m;
  m.quality = triangle_quality(a, b, c);

  const Vec3 u = b - a;
  const Vec3 v = c - a;
  const Vec3 w = cross(u, v);
  m.area = 0.5 * norm(w);
  m.centroid = (a + b + c) / 3.0;
  m.barycenter = m.centroid;
  m.circumcenter = a + cross(norm2(u) * v - norm2(v) * u, w) / (2.0 * norm2(w));
  m.well_centered = acute(u, v) && acute(a - b, c - b) && acute(a - c, b - c);
  m.center_offset = distance(m.barycenter, m.circumcenter);
  return m;
}

TriangleMetrics triangle_metrics(const TriangleMesh& mesh, TriangleId t) {
  if (t < 0 || t >= mesh.triangle_slots() || !mesh.triangle_alive(t)) {
    throw Error(ErrorCode::IndexOutOfRange, "no live triangle " + std::to_string(t), t);
  }
  auto p = mesh.corners(t);
  try {
    return triangle_metrics(p[0], p[1], p[2]);
  } catch (const Error& e) {
    throw Error(e.code(), "triangle " + std::to_string(t) + " area below tolerance", t);
  }
}

}  // namespace stablemesh
