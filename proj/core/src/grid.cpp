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

#include "stablemesh/grid.h"

#include <algorithm>
#include <cmath>

#include "stablemesh/error.h"

namespace stablemesh {

UniformGrid::UniformGrid(std::span<const Vec3> points, double cell_size)
    : points_(points.begin(), points.end()), cell_size_(cell_size) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size)) {
    throw Error(ErrorCode::InvalidArgument, "grid cell size must be positive");
  }
  if (points_.empty()) return;
  lo_ = hi_ = points_.front();
  for (int id = 0; id < size(); ++id) {
    const Vec3& p = points_[id];
    if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "non-finite grid point", id);
    lo_ = {std::min(lo_.x, p.x), std::min(lo_.y, p.y), std::min(lo_.z, p.z)};
    hi_ = {std::max(hi_.x, p.x), std::max(hi_.y, p.y), std::max(hi_.z, p.z)};
    cells_[cell_of(p)].push_back(id);
  }
}

UniformGrid::CellKey UniformGrid::cell_of(const Vec3& p) const {
  return {static_cast<std::int64_t>(std::floor(p.x / cell_size_)),
          static_cast<std::int64_t>(std::floor(p.y / cell_size_)),
          static_cast<std::int64_t>(std::floor(p.z / cell_size_))};
}

template <typename Visit>
void UniformGrid::visit_box(const Vec3& lo, const Vec3& hi, Visit&& visit) const {
  // Clip to the occupied bounding box so huge radii stay cheap.
  const Vec3 a{std::max(lo.x, lo_.x), std::max(lo.y, lo_.y), std::max(lo.z, lo_.z)};
  const Vec3 b{std::min(hi.x, hi_.x), std::min(hi.y, hi_.y), std::min(hi.z, hi_.z)};
  if (a.x > b.x || a.y > b.y || a.z > b.z) return;
  const CellKey c0 = cell_of(a);
  const CellKey c1 = cell_of(b);
  for (std::int64_t i = c0.i; i <= c1.i; ++i) {
    for (std::int64_t j = c0.j; j <= c1.j; ++j) {
      for (std::int64_t k = c0.k; k <= c1.k; ++k) {
        auto it = cells_.find({i, j, k});
        if (it == cells_.end()) continue;
        for (int id : it->second) visit(id);
      }
    }
  }
}

std::vector<int> UniformGrid::query_radius(const Vec3& center, double radius) const {
  std::vector<int> out;
  if (points_.empty() || radius < 0.0) return out;
  const Vec3 r{radius, radius, radius};
  const double r2 = radius * radius;
  visit_box(center - r, center + r, [&](int id) {
    if (norm2(points_[id] - center) <= r2) out.push_back(id);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> UniformGrid::query_edge(const Vec3& a, const Vec3& b, double rho) const {
  std::vector<int> out;
  if (points_.empty() || rho < 0.0) return out;
  const Vec3 r{rho, rho, rho};
  const Vec3 lo{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
  const Vec3 hi{std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
  const double r2 = rho * rho;
  visit_box(lo - r, hi + r, [&](int id) {
    const Vec3& x = points_[id];
    if (norm2(x - a) <= r2 || norm2(x - b) <= r2) out.push_back(id);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::span<const int> UniformGrid::cell_members(const Vec3& p) const {
  auto it = cells_.find(cell_of(p));
  if (it == cells_.end()) return {};
  return it->second;
}

}  // namespace stablemesh
