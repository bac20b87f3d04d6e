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

#include "stablemesh/vec3.h"

namespace stablemesh {

/// Plane a*x + b*y + c*z + d = 0 with (a, b, c) a unit normal.
struct HomogeneousPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  /// Plane through `point` with the given (not necessarily unit) normal.
  /// Returns the zero plane when the normal vanishes.
  static HomogeneousPlane through(const Vec3& point, const Vec3& normal);

  double signed_distance(const Vec3& p) const { return a * p.x + b * p.y + c * p.z + d; }
};

/**
 * Symmetric 4x4 form acting on homogeneous points [x y z 1]. Only the upper
 * triangle is stored, row-major:
 *
 *   [ m0 m1 m2 m3 ]
 *   [    m4 m5 m6 ]
 *   [       m7 m8 ]
 *   [          m9 ]
 */
class Quadric {
 public:
  Quadric() { m_.fill(0.0); }

  /// w * p p^T for the homogeneous vector p = (a, b, c, d).
  static Quadric outer(double a, double b, double c, double d, double w = 1.0);
  static Quadric from_plane(const HomogeneousPlane& p, double w = 1.0) {
    return outer(p.a, p.b, p.c, p.d, w);
  }

  Quadric& operator+=(const Quadric& o) {
    for (int i = 0; i < 10; ++i) m_[i] += o.m_[i];
    return *this;
  }
  friend Quadric operator+(Quadric l, const Quadric& r) { return l += r; }
  Quadric& operator*=(double s) {
    for (double& v : m_) v *= s;
    return *this;
  }

  /// v^T Q v with v = [p 1].
  double evaluate(const Vec3& p) const;

  /// Full-matrix entry (i, j), 0 <= i, j < 4.
  double at(int i, int j) const;

  double trace() const { return m_[0] + m_[4] + m_[7] + m_[9]; }
  const std::array<double, 10>& coefficients() const { return m_; }

 private:
  std::array<double, 10> m_;
};

enum class PlacementMethod { Solve, Segment, Discrete };

struct QuadricPlacement {
  Vec3 position;
  double cost = 0.0;
  PlacementMethod method = PlacementMethod::Discrete;
};

/**
 * Minimizer of `q` for collapsing the edge (v1, v2). Solves the 3x3 normal
 * equations when they are well conditioned, otherwise minimizes along the
 * segment, otherwise takes the best of {midpoint, v1, v2}. The result never
 * costs more than the best of those three points.
 */
QuadricPlacement optimal_placement(const Quadric& q, const Vec3& v1, const Vec3& v2);

}  // namespace stablemesh
