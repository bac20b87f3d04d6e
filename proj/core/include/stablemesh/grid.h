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
#include <span>
#include <unordered_map>
#include <vector>

#include "stablemesh/vec3.h"

namespace stablemesh {

/// Hashed uniform grid over a fixed point set, answering closed-ball radius
/// queries. Immutable after construction.
class UniformGrid {
 public:
  UniformGrid() = default;
  /// Throws Error(InvalidArgument) unless cell_size > 0.
  UniformGrid(std::span<const Vec3> points, double cell_size);

  int size() const { return static_cast<int>(points_.size()); }
  bool empty() const { return points_.empty(); }
  double cell_size() const { return cell_size_; }
  int cell_count() const { return static_cast<int>(cells_.size()); }
  const Vec3& point(int id) const { return points_[id]; }
  std::span<const Vec3> points() const { return points_; }
  const Vec3& lower_bound() const { return lo_; }
  const Vec3& upper_bound() const { return hi_; }

  /// Ids with |x - center| <= radius, ascending.
  std::vector<int> query_radius(const Vec3& center, double radius) const;

  /// Ids with min(|x - a|, |x - b|) <= rho, ascending.
  std::vector<int> query_edge(const Vec3& a, const Vec3& b, double rho) const;

  /// Ids stored in the cell containing p (empty if none).
  std::span<const int> cell_members(const Vec3& p) const;

 private:
  struct CellKey {
    std::int64_t i, j, k;
    friend bool operator==(const CellKey&, const CellKey&) = default;
  };
  struct CellHash {
    std::size_t operator()(const CellKey& c) const {
      std::uint64_t h = static_cast<std::uint64_t>(c.i) * 0x9E3779B97F4A7C15ull;
      h ^= static_cast<std::uint64_t>(c.j) * 0xC2B2AE3D27D4EB4Full + (h << 6) + (h >> 2);
      h ^= static_cast<std::uint64_t>(c.k) * 0x165667B19E3779F9ull + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h);
    }
  };

  CellKey cell_of(const Vec3& p) const;
  template <typename Visit>
  void visit_box(const Vec3& lo, const Vec3& hi, Visit&& visit) const;

  std::vector<Vec3> points_;
  double cell_size_ = 1.0;
  Vec3 lo_;
  Vec3 hi_;
  std::unordered_map<CellKey, std::vector<int>, CellHash> cells_;
};

}  // namespace stablemesh
