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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "stablemesh/error.h"
#include "stablemesh/gb_energy.h"
#include "stablemesh/shapes.h"
#include "test_support.h"

namespace stablemesh {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

ErrorCode code_of(const std::function<void()>& f, int* index = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (index) *index = e.index();
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(Quadrature, WeightsSumToArea) {
  std::mt19937_64 rng(1);
  const TriangleMesh mesh = testing::bumpy_sphere(2, rng);
  for (QuadratureOrder order : {QuadratureOrder::centroid_1pt, QuadratureOrder::symmetric_3pt}) {
    const auto nodes = quadrature_nodes(mesh, order);
    std::vector<double> sums(mesh.triangle_slots(), 0.0);
    for (const QuadratureNode& n : nodes) {
      EXPECT_GT(n.weight, 0.0);
      EXPECT_NEAR(norm(n.normal), 1.0, 1e-12);
      sums[n.triangle] += n.weight;
      // Node lies in its triangle: barycentric coordinates in [0, 1].
      const auto c = mesh.corners(n.triangle);
      const double area = triangle_area(c[0], c[1], c[2]);
      const double l0 = triangle_area(n.point, c[1], c[2]) / area;
      const double l1 = triangle_area(c[0], n.point, c[2]) / area;
      const double l2 = triangle_area(c[0], c[1], n.point) / area;
      EXPECT_NEAR(l0 + l1 + l2, 1.0, 1e-9);
    }
    for (TriangleId t : mesh.live_triangles()) {
      const auto c = mesh.corners(t);
      EXPECT_LE(testing::relative_error(sums[t], triangle_area(c[0], c[1], c[2])), 1e-12);
    }
  }
  EXPECT_EQ(parse_quadrature("1pt"), QuadratureOrder::centroid_1pt);
  EXPECT_EQ(parse_quadrature("3pt"), QuadratureOrder::symmetric_3pt);
  EXPECT_THROW(parse_quadrature("7pt"), Error);
}

TEST(BornRadii, CenteredUnitSphere) {
  const std::vector<Vec3> origin{{0, 0, 0}};
  double previous = kInf;
  for (int level = 2; level <= 5; ++level) {
    const double r = born_radii(shapes::icosphere(level), origin)[0];
    const double error = std::abs(1.0 / r - 1.0);
    if (level == 3) EXPECT_LT(error, 0.02);
    if (level >= 4) EXPECT_LT(error, 0.005);
    EXPECT_LT(error, previous);
    previous = error;
  }
}

TEST(BornRadii, SphereOfRadiusTwo) {
  const std::vector<Vec3> origin{{0, 0, 0}};
  for (QuadratureOrder order : {QuadratureOrder::centroid_1pt, QuadratureOrder::symmetric_3pt}) {
    const double r = born_radii(shapes::icosphere(3, 2.0), origin, order)[0];
    EXPECT_NEAR(r, 2.0, 0.04);
  }
}

TEST(BornRadii, QuadratureRulesConverge) {
  const std::vector<Vec3> atoms{{0, 0, 0}, {0.3, -0.2, 0.1}};
  double previous = kInf;
  for (int level = 1; level <= 4; ++level) {
    const TriangleMesh mesh = shapes::icosphere(level);
    const auto one = born_radii(mesh, atoms, QuadratureOrder::centroid_1pt);
    const auto three = born_radii(mesh, atoms, QuadratureOrder::symmetric_3pt);
    const double gap = std::abs(one[1] - three[1]) / three[1];
    EXPECT_LT(gap, previous);
    previous = gap;
  }
}

TEST(BornRadii, RigidMotionInvariance) {
  std::mt19937_64 rng(8);
  const TriangleMesh mesh = shapes::icosphere(3);
  const std::vector<Vec3> atoms{{0, 0, 0}, {0.2, 0.1, -0.3}};
  const auto radii = born_radii(mesh, atoms);
  for (int i = 0; i < 10; ++i) {
    const testing::RigidMotion m = testing::RigidMotion::random(rng);
    const std::vector<Vec3> moved_atoms{m(atoms[0]), m(atoms[1])};
    const auto moved = born_radii(testing::transformed(mesh, m), moved_atoms);
    for (int k = 0; k < 2; ++k) EXPECT_LE(testing::relative_error(moved[k], radii[k]), 1e-9);
  }
}

TEST(BornRadii, InwardOrientation) {
  const TriangleMesh mesh = shapes::icosphere(2);
  std::vector<Vec3> positions;
  for (VertexId v = 0; v < mesh.vertex_slots(); ++v) positions.push_back(mesh.position(v));
  std::vector<Triangle> flipped;
  for (TriangleId t : mesh.live_triangles()) {
    const Triangle& tri = mesh.triangle(t);
    flipped.push_back({tri[0], tri[2], tri[1]});
  }
  const TriangleMesh inward(std::move(positions), std::move(flipped));
  const std::vector<Vec3> atoms{{0, 0, 0}};
  int index = -1;
  EXPECT_EQ(code_of([&] { born_radii(inward, atoms); }, &index), ErrorCode::NonPositiveIntegral);
  EXPECT_EQ(index, 0);
}

TEST(BornRadii, OutsideAtomReportsIndex) {
  const std::vector<Vec3> atoms{{0, 0, 0}, {0.5, 0, 0}, {3, 0, 0}};
  int index = -1;
  EXPECT_EQ(code_of([&] { born_radii(shapes::icosphere(2), atoms); }, &index),
            ErrorCode::NonPositiveIntegral);
  EXPECT_EQ(index, 2);
}

TEST(BornRadii, AtomOnQuadratureNode) {
  const TriangleMesh mesh = shapes::icosphere(1);
  const auto nodes = quadrature_nodes(mesh, QuadratureOrder::centroid_1pt);
  const std::vector<Vec3> atoms{{0, 0, 0}, nodes[3].point};
  int index = -1;
  EXPECT_EQ(code_of([&] { born_radii(mesh, atoms); }, &index), ErrorCode::AtomTooCloseToSurface);
  EXPECT_EQ(index, 1);
}

TEST(PolarizationEnergy, SingleAtom) {
  const std::vector<Atom> atoms{{{0, 0, 0}, 1.0, 1.5, 1.0}};
  EXPECT_EQ(polarization_energy(atoms, GBParams{1.0, kInf}), -0.5);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const double q = std::uniform_real_distribution<double>(-2, 2)(rng);
    const double r = std::uniform_real_distribution<double>(0.5, 5)(rng);
    const GBParams params{std::uniform_real_distribution<double>(1, 4)(rng), 80.0};
    const std::vector<Atom> one{{testing::random_point(rng, 5), q, 1.0, r}};
    const double want = -params.tau() * q * q / (2.0 * r);
    EXPECT_LE(testing::relative_error(polarization_energy(one, params), want), 1e-12);
  }
}

TEST(PolarizationEnergy, DistantPair) {
  const std::vector<Atom> atoms{{{0, 0, 0}, 1.0, 1.0, 1.0}, {{100, 0, 0}, 1.0, 1.0, 1.0}};
  const double cross = 1.0 / std::sqrt(100.0 * 100.0 + std::exp(-100.0 * 100.0 / 4.0));
  const double want = -0.5 * (1.0 + 1.0 + 2.0 * cross);
  EXPECT_NEAR(polarization_energy(atoms, GBParams{1.0, kInf}), want, 1e-15);
  EXPECT_NEAR(cross, 0.01, 1e-15);
}

TEST(PolarizationEnergy, DirectSummation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Atom> atoms(6);
    for (Atom& a : atoms) {
      a.center = testing::random_point(rng, 4);
      a.charge = std::uniform_real_distribution<double>(-1, 1)(rng);
      a.born_radius = std::uniform_real_distribution<double>(0.5, 3)(rng);
    }
    const GBParams params{2.0, 78.5};
    double sum = 0.0;
    for (const Atom& i : atoms) {
      for (const Atom& j : atoms) {
        const double r2 = norm2(i.center - j.center);
        const double rr = i.born_radius * j.born_radius;
        sum += i.charge * j.charge / std::sqrt(r2 + rr * std::exp(-r2 / (4.0 * rr)));
      }
    }
    EXPECT_LE(testing::relative_error(polarization_energy(atoms, params), -params.tau() / 2.0 * sum),
              1e-12);
  }
}

TEST(PolarizationEnergy, EqualDielectricsGiveZero) {
  const std::vector<Atom> atoms{{{0, 0, 0}, 1.0, 1.0, 1.0}, {{1, 2, 3}, -0.4, 1.0, 2.0}};
  EXPECT_EQ(polarization_energy(atoms, GBParams{4.0, 4.0}), 0.0);
}

TEST(PolarizationEnergy, PermutationInvariance) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Atom> atoms(10);
    for (Atom& a : atoms) {
      a.center = testing::random_point(rng, 6);
      a.charge = std::uniform_real_distribution<double>(-1, 1)(rng);
      a.born_radius = std::uniform_real_distribution<double>(0.5, 3)(rng);
    }
    const double g = polarization_energy(atoms, GBParams{});
    std::shuffle(atoms.begin(), atoms.end(), rng);
    EXPECT_EQ(polarization_energy(atoms, GBParams{}), g);
  }
}

TEST(PolarizationEnergy, InvalidRadius) {
  const std::vector<Atom> atoms{{{0, 0, 0}, 1.0, 1.0, 1.0}, {{1, 0, 0}, 1.0, 1.0, 0.0}};
  int index = -1;
  EXPECT_EQ(code_of([&] { polarization_energy(atoms, GBParams{}); }, &index),
            ErrorCode::InvalidRadius);
  EXPECT_EQ(index, 1);
}

TEST(GBParams, Validation) {
  EXPECT_NEAR(GBParams{}.tau(), 1.0 - 1.0 / 80.0, 1e-15);
  EXPECT_THROW((GBParams{0.0, 80.0}.check()), Error);
  EXPECT_THROW((GBParams{1.0, -2.0}.check()), Error);
}

TEST(SurfaceArea, Sphere) {
  EXPECT_LE(testing::relative_error(surface_area(shapes::icosphere(4)), 4.0 * kPi), 0.005);
}

TEST(SurfaceArea, SingleTriangle) {
  const TriangleMesh open({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}});
  EXPECT_EQ(surface_area(open), 0.5);
  EXPECT_EQ(nonpolar_energy(open, 2.0), 1.0);
}

TEST(SurfaceArea, RigidMotion) {
  std::mt19937_64 rng(9);
  const TriangleMesh mesh = testing::bumpy_sphere(3, rng);
  const double area = surface_area(mesh);
  const TriangleMesh moved = testing::transformed(mesh, testing::RigidMotion::random(rng));
  EXPECT_LE(testing::relative_error(surface_area(moved), area), 1e-12);
}

TEST(AssignBornRadii, FillsAtoms) {
  std::vector<Atom> atoms{{{0, 0, 0}, 1.0, 1.5, 0.0}};
  assign_born_radii(shapes::icosphere(3), atoms);
  EXPECT_NEAR(atoms[0].born_radius, 1.0, 0.02);
  EXPECT_EQ(centers(atoms)[0], (Vec3{0, 0, 0}));
}

}  // namespace
}  // namespace stablemesh
