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

#include "stablemesh/decimate.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "stablemesh/error.h"

namespace stablemesh {

namespace {

// Min-heap order: cost, then edge ids for reproducible ties.
bool heap_after(const CollapseCandidate& l, const CollapseCandidate& r) {
  if (l.cost != r.cost) return l.cost > r.cost;
  if (l.v1 != r.v1) return l.v1 > r.v1;
  return l.v2 > r.v2;
}

}  // namespace

void DecimationConfig::check() const {
  if (target_faces < 4) throw Error(ErrorCode::InvalidArgument, "target_faces must be >= 4");
  if (stages < 1) throw Error(ErrorCode::InvalidArgument, "stages must be >= 1");
  if (validate_every < 0) throw Error(ErrorCode::InvalidArgument, "validate_every must be >= 0");
  gb.check();
}

QualitySummary quality_summary(const TriangleMesh& mesh) {
  QualitySummary s;
  std::vector<double> q;
  q.reserve(mesh.num_triangles());
  int well_centered = 0;
  for (TriangleId t = 0; t < mesh.triangle_slots(); ++t) {
    if (!mesh.triangle_alive(t)) continue;
    ++s.triangles;
    auto [a, b, c] = mesh.corners(t);
    if (triangle_area(a, b, c) <= kDegenerateArea) {
      ++s.degenerate;
      continue;
    }
    const TriangleMetrics m = triangle_metrics(a, b, c);
    q.push_back(m.quality);
    if (m.well_centered) ++well_centered;
  }
  if (q.empty()) return s;
  double sum = 0.0;
  for (double v : q) sum += v;
  std::sort(q.begin(), q.end());
  s.min_quality = q.front();
  s.max_quality = q.back();
  s.mean_quality = sum / static_cast<double>(q.size());
  s.median_quality = q[q.size() / 2];
  s.p90_quality = q[std::min(q.size() - 1, (q.size() * 9) / 10)];
  s.well_centered_fraction = static_cast<double>(well_centered) / static_cast<double>(s.triangles);
  return s;
}

Decimator::Decimator(TriangleMesh& mesh, std::optional<std::span<const Vec3>> atoms,
                     DecimationConfig config)
    : mesh_(mesh), config_(std::move(config)) {
  config_.check();
  if (config_.cost == CostKind::gb_qe) config_.gb.variant = GbVariant::qe_term;
  if (needs_atoms(config_.cost)) {
    if (!atoms) {
      throw Error(ErrorCode::MissingAtoms,
                  "cost '" + std::string(to_string(config_.cost)) + "' requires an atom set");
    }
    grid_.emplace(*atoms, config_.gb.rho);
  }
  try {
    validate(mesh_);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidInput, e.what(), e.index());
  }
  rebuild();
}

void Decimator::refresh_quadric(VertexId v) {
  try {
    quadrics_[v] = vertex_quadric(mesh_, v, config_.area_weighted_quadrics);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IsolatedVertex) throw;
    quadrics_[v] = Quadric();
  }
}

void Decimator::rebuild() {
  quadrics_.assign(mesh_.vertex_slots(), Quadric());
  for (VertexId v = 0; v < mesh_.vertex_slots(); ++v) {
    if (mesh_.vertex_alive(v) && !mesh_.incident_triangles(v).empty()) refresh_quadric(v);
  }
  heap_.clear();
  const std::vector<Edge> edges = mesh_.edges();
  heap_.reserve(edges.size());
  for (const Edge& e : edges) push_candidate(e.a, e.b);
}

std::uint32_t Decimator::bump(const Edge& e) { return ++versions_[e.key()]; }

std::optional<CollapseCandidate> Decimator::evaluate(VertexId a, VertexId b,
                                                     std::string* reason) const {
  auto reject = [&](std::string_view why) -> std::optional<CollapseCandidate> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  const Edge e(a, b);
  EdgeStar star;
  try {
    star = edge_star(mesh_, e.a, e.b);
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NotAnEdge) return reject("not_an_edge");
    if (err.code() == ErrorCode::StarNotDisk) return reject("star_not_disk");
    throw;
  }
  const CollapseCheck legal = can_collapse(mesh_, star);
  if (!legal) return reject(to_string(legal.verdict));

  std::vector<Vec3> nearby;
  if (grid_) {
    for (int id : grid_->query_edge(mesh_.position(e.a), mesh_.position(e.b), config_.gb.rho)) {
      nearby.push_back(grid_->point(id));
    }
  }

  bool saw_flip = false;
  bool saw_degenerate = false;
  auto filter = [&](const Vec3& p) {
    const RingCheck ring = check_ring(mesh_, star, p);
    if (!ring.degenerate.empty()) {
      saw_degenerate = true;
      return false;
    }
    if (config_.veto_flips && !ring.flipped.empty()) {
      saw_flip = true;
      return false;
    }
    return true;
  };

  Placement placement;
  try {
    placement = placement_for(config_.cost, mesh_, star, quadrics_[e.a], quadrics_[e.b], nearby,
                              config_.gb, filter);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::CandidateInfeasible) throw;
    if (saw_flip) return reject("flip");
    if (saw_degenerate) return reject("degenerate");
    return reject("infeasible");
  }

  CollapseCandidate c;
  c.v1 = e.a;
  c.v2 = e.b;
  c.placement = placement.position;
  c.cost = placement.cost;
  c.kind = config_.cost;
  return c;
}

void Decimator::push_candidate(VertexId a, VertexId b) {
  const Edge e(a, b);
  const std::uint32_t stamp = bump(e);
  std::string reason;
  std::optional<CollapseCandidate> c = evaluate(e.a, e.b, &reason);
  if (!c) {
    ++trace_.rejections[reason];
    return;
  }
  c->stamp = stamp;
  heap_.push_back(*c);
  std::push_heap(heap_.begin(), heap_.end(), heap_after);
}

int Decimator::refresh_around(VertexId survivor) {
  std::vector<VertexId> ring = mesh_.neighbors(survivor);
  ring.push_back(survivor);
  for (VertexId v : ring) refresh_quadric(v);

  std::vector<Edge> edges;
  for (VertexId v : ring) {
    for (VertexId n : mesh_.neighbors(v)) edges.emplace_back(v, n);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const Edge& e : edges) push_candidate(e.a, e.b);
  return static_cast<int>(edges.size());
}

bool Decimator::step() {
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), heap_after);
    const CollapseCandidate c = heap_.back();
    heap_.pop_back();
    if (!mesh_.vertex_alive(c.v1) || !mesh_.vertex_alive(c.v2)) continue;
    auto it = versions_.find(Edge(c.v1, c.v2).key());
    if (it == versions_.end() || it->second != c.stamp) continue;

    // The global vertex count can change legality without touching the star.
    if (mesh_.num_vertices() - 1 < 4) {
      ++trace_.rejections[std::string(to_string(CollapseVerdict::TooFewVertices))];
      continue;
    }
    collapse_edge(mesh_, c.v1, c.v2, c.placement);
    trace_.collapses.push_back({c.v1, c.v2, c.placement, c.cost, mesh_.num_triangles()});
    // The edge no longer exists; retire its stamp.
    bump(Edge(c.v1, c.v2));
    refresh_around(c.v1);

    if (config_.validate_every > 0 &&
        trace_.collapses.size() % static_cast<std::size_t>(config_.validate_every) == 0) {
      validate(mesh_);
      ++trace_.validations;
    }
    return true;
  }
  return false;
}

std::vector<CollapseCandidate> Decimator::live_entries() const {
  std::vector<CollapseCandidate> out;
  for (const CollapseCandidate& c : heap_) {
    if (!mesh_.vertex_alive(c.v1) || !mesh_.vertex_alive(c.v2)) continue;
    auto it = versions_.find(Edge(c.v1, c.v2).key());
    if (it != versions_.end() && it->second == c.stamp) out.push_back(c);
  }
  return out;
}

void apply_stage_hook(TriangleMesh& mesh, const StageHook& hook) {
  if (!hook) return;
  std::vector<Triangle> triangles;
  std::vector<bool> alive;
  triangles.reserve(mesh.triangle_slots());
  for (TriangleId t = 0; t < mesh.triangle_slots(); ++t) {
    triangles.push_back(mesh.triangle(t));
    alive.push_back(mesh.triangle_alive(t));
  }
  std::vector<bool> vertex_alive;
  for (VertexId v = 0; v < mesh.vertex_slots(); ++v) vertex_alive.push_back(mesh.vertex_alive(v));

  hook(mesh);

  bool same = mesh.triangle_slots() == static_cast<int>(triangles.size()) &&
              mesh.vertex_slots() == static_cast<int>(vertex_alive.size());
  for (TriangleId t = 0; same && t < mesh.triangle_slots(); ++t) {
    same = mesh.triangle(t) == triangles[t] && mesh.triangle_alive(t) == alive[t];
  }
  for (VertexId v = 0; same && v < mesh.vertex_slots(); ++v) {
    same = mesh.vertex_alive(v) == vertex_alive[v] && is_finite(mesh.position(v));
  }
  if (!same) throw Error(ErrorCode::HookViolation, "stage hook changed mesh connectivity");
  try {
    validate(mesh);
  } catch (const Error& e) {
    throw Error(ErrorCode::HookViolation, std::string("mesh invalid after stage hook: ") + e.what());
  }
}

DecimationTrace decimate(TriangleMesh& mesh, std::optional<std::span<const Vec3>> atoms,
                         const DecimationConfig& config) {
  Decimator decimator(mesh, atoms, config);
  const int initial = mesh.num_triangles();
  const int target = config.target_faces;
  if (target >= initial) return std::move(decimator.trace());

  const long removal = initial - target;
  for (int stage = 1; stage <= config.stages; ++stage) {
    const int stage_target = initial - static_cast<int>(removal * stage / config.stages);
    while (mesh.num_triangles() > stage_target) {
      if (!decimator.step()) {
        decimator.trace().queue_exhausted = true;
        break;
      }
    }
    apply_stage_hook(mesh, config.stage_hook);
    decimator.trace().stages.push_back({stage, mesh.num_triangles(), quality_summary(mesh)});
    if (decimator.trace().queue_exhausted) break;
    if (stage < config.stages && config.stage_hook) decimator.rebuild();
  }
  return std::move(decimator.trace());
}

}  // namespace stablemesh
