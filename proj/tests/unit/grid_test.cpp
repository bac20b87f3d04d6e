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
#include <random>
#include <set>

#include "stablemesh/error.h"
#include "stablemesh/grid.h"
#include "test_support.h"

namespace stablemesh {
namespace {

std::vector<int> scan_radius(std::span<const Vec3> points, const Vec3& c, double r) {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    if (distance(points[i], c) <= r) ids.push_back(i);
  }
  return ids;
}

std::vector<int> scan_edge(std::span<const Vec3> points, const Vec3& a, const Vec3& b, double r) {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    if (std::min(distance(points[i], a), distance(points[i], b)) <= r) ids.push_back(i);
  }
  return ids;
}

std::vector<Vec3> random_points(std::mt19937_64& rng, int n, double extent) {
  std::vector<Vec3> points(n);
  for (Vec3& p : points) p = testing::random_point(rng, extent);
  return points;
}

TEST(UniformGrid, Empty) {
  const UniformGrid grid({}, 5.0);
  EXPECT_TRUE(grid.empty());
  EXPECT_TRUE(grid.query_radius({0, 0, 0}, 100.0).empty());
  EXPECT_TRUE(grid.query_edge({0, 0, 0}, {1, 1, 1}, 100.0).empty());
}

TEST(UniformGrid, RejectsBadCellSize) {
  const std::vector<Vec3> p{{0, 0, 0}};
  EXPECT_THROW(UniformGrid(p, 0.0), Error);
  EXPECT_THROW(UniformGrid(p, -1.0), Error);
}

TEST(UniformGrid, SelfRetrieval) {
  std::mt19937_64 rng(1);
  const auto points = random_points(rng, 1000, 30.0);
  const UniformGrid grid(points, 5.0);
  for (int i = 0; i < grid.size(); ++i) {
    const auto hits = grid.query_radius(points[i], 0.1);
    EXPECT_TRUE(std::binary_search(hits.begin(), hits.end(), i));
    // Each point sits in exactly the cell containing it.
    const auto members = grid.cell_members(points[i]);
    EXPECT_EQ(std::count(members.begin(), members.end(), i), 1);
  }
}

TEST(UniformGrid, EveryPointInOneCell) {
  std::mt19937_64 rng(2);
  const auto points = random_points(rng, 500, 12.0);
  const UniformGrid grid(points, 2.5);
  std::set<const int*> cells;
  long total = 0;
  for (const Vec3& p : points) {
    const auto members = grid.cell_members(p);
    if (cells.insert(members.data()).second) total += static_cast<long>(members.size());
  }
  EXPECT_EQ(static_cast<int>(cells.size()), grid.cell_count());
  EXPECT_EQ(total, grid.size());
}

TEST(UniformGrid, RadiusMatchesScan) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto points = random_points(rng, 1000, 20.0);
    const double cell = std::uniform_real_distribution<double>(0.5, 8.0)(rng);
    const UniformGrid grid(points, cell);
    for (int q = 0; q < 100; ++q) {
      const Vec3 c = testing::random_point(rng, 25.0);
      const double r = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
      EXPECT_EQ(grid.query_radius(c, r), scan_radius(points, c, r));
    }
  }
}

TEST(UniformGrid, EdgeMatchesScan) {
  std::mt19937_64 rng(4);
  const auto points = random_points(rng, 1000, 20.0);
  const UniformGrid grid(points, 5.0);
  for (int q = 0; q < 100; ++q) {
    const Vec3 a = testing::random_point(rng, 22.0);
    const Vec3 b = a + testing::random_point(rng, 3.0);
    EXPECT_EQ(grid.query_edge(a, b, 5.0), scan_edge(points, a, b, 5.0));
  }
}

TEST(UniformGrid, ClosedBall) {
  const std::vector<Vec3> points{{3, 4, 0}, {0, 0, 5.000001}};
  const UniformGrid grid(points, 5.0);
  EXPECT_EQ(grid.query_radius({0, 0, 0}, 5.0), (std::vector<int>{0}));
  EXPECT_EQ(grid.query_edge({10, 0, 0}, {0, 0, 0}, 5.0), (std::vector<int>{0}));
}

}  // namespace
}  // namespace stablemesh
