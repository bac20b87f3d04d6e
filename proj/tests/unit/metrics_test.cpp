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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "stablemesh/error.h"
#include "stablemesh/mesh.h"
#include "test_support.h"

namespace stablemesh {
namespace {

constexpr double kPi = 3.14159265358979323846;

TEST(TriangleMetrics, Equilateral) {
  const Vec3 a{0, 0, 0}, b{1, 0, 0}, c{0.5, std::sqrt(3.0) / 2.0, 0};
  const TriangleMetrics m = triangle_metrics(a, b, c);
  EXPECT_NEAR(m.quality, 2.0, 1e-12);
  EXPECT_TRUE(m.well_centered);
  EXPECT_NEAR(m.center_offset, 0.0, 1e-12);
  EXPECT_NEAR(m.area, std::sqrt(3.0) / 4.0, 1e-15);
}

TEST(TriangleMetrics, ThirtySixtyNinety) {
  const Vec3 a{0, 0, 0}, b{std::sqrt(3.0), 0, 0}, c{0, 1, 0};
  const TriangleMetrics m = triangle_metrics(a, b, c);
  EXPECT_NEAR(m.quality, 5.0, 1e-12);
  EXPECT_FALSE(m.well_centered);
  // Right triangle: circumcenter is the hypotenuse midpoint.
  EXPECT_NEAR(distance(m.circumcenter, midpoint(b, c)), 0.0, 1e-12);
}

TEST(TriangleMetrics, ObtuseIsNotWellCentered) {
  const TriangleMetrics m = triangle_metrics({0, 0, 0}, {4, 0, 0}, {2, 0.5, 0});
  EXPECT_FALSE(m.well_centered);
  EXPECT_GT(m.center_offset, 0.0);
}

TEST(TriangleMetrics, Degenerate) {
  try {
    triangle_metrics({0, 0, 0}, {1, 0, 0}, {2, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
  }
}

TEST(TriangleMetrics, FromMesh) {
  const TriangleMesh mesh = shapes::octahedron();
  const TriangleMetrics m = triangle_metrics(mesh, 0);
  EXPECT_NEAR(m.quality, 2.0, 1e-12);
  EXPECT_EQ(m.barycenter, m.centroid);
}

TEST(TriangleMetrics, RandomTriangleProperties) {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 a = testing::random_point(rng, 5.0);
    const Vec3 b = testing::random_point(rng, 5.0);
    const Vec3 c = testing::random_point(rng, 5.0);
    if (triangle_area(a, b, c) <= 1e-6) continue;
    const TriangleMetrics m = triangle_metrics(a, b, c);
    EXPECT_GE(m.quality, 2.0);
    const double l0 = distance(a, b), l1 = distance(b, c), l2 = distance(c, a);
    const double lmax = std::max({l0, l1, l2}), lmin = std::min({l0, l1, l2});
    if (m.quality - 2.0 <= 1e-9) {
      EXPECT_LE((lmax - lmin) / lmax, 1e-6);
    }
    // Barycenter is the plain vertex average.
    EXPECT_EQ(m.barycenter, (a + b + c) / 3.0);
    const double ra = distance(m.circumcenter, a);
    EXPECT_LE(testing::relative_error(distance(m.circumcenter, b), ra), 1e-9);
    EXPECT_LE(testing::relative_error(distance(m.circumcenter, c), ra), 1e-9);
    EXPECT_GE(m.center_offset, 0.0);

    // Direct evaluation of side and angle ratios.
    auto angle = [](const Vec3& p, const Vec3& q, const Vec3& r) {
      return std::acos(std::clamp(dot(q - p, r - p) / (norm(q - p) * norm(r - p)), -1.0, 1.0));
    };
    const double A = angle(a, b, c), B = angle(b, c, a), C = angle(c, a, b);
    EXPECT_NEAR(A + B + C, kPi, 1e-9);
    const double q = lmax / lmin + std::max({A, B, C}) / std::min({A, B, C});
    EXPECT_LE(testing::relative_error(m.quality, q), 1e-7);
    EXPECT_EQ(m.well_centered, std::max({A, B, C}) < kPi / 2.0);
  }
}

TEST(TriangleMetrics, RigidMotionAndScaleInvariance) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Vec3 a = testing::random_point(rng, 2.0);
    const Vec3 b = testing::random_point(rng, 2.0);
    const Vec3 c = testing::random_point(rng, 2.0);
    if (triangle_area(a, b, c) <= 1e-4) continue;
    const testing::RigidMotion m = testing::RigidMotion::random(rng);
    const double s = std::uniform_real_distribution<double>(0.01, 100.0)(rng);
    const double q = triangle_quality(a, b, c);
    EXPECT_LE(testing::relative_error(triangle_quality(m(a), m(b), m(c)), q), 1e-9);
    EXPECT_LE(testing::relative_error(triangle_quality(a * s, b * s, c * s), q), 1e-9);
  }
}

TEST(CheckRing, DetectsFlipAndDegeneracy) {
  const TriangleMesh mesh = shapes::octahedron();
  const EdgeStar star = edge_star(mesh, 0, 2);
  EXPECT_TRUE(check_ring(mesh, star, midpoint(mesh.position(0), mesh.position(2))).ok());
  EXPECT_FALSE(check_ring(mesh, star, {-3, -3, 0}).flipped.empty());
  // On the segment between ring vertices 1 and 4, triangle (2, 1, 4) collapses
  // to a line.
  EXPECT_FALSE(check_ring(mesh, star, {-0.5, 0, 0.5}).degenerate.empty());
}

}  // namespace
}  // namespace stablemesh
