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

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stablemesh/cost.h"
#include "stablemesh/grid.h"
#include "stablemesh/mesh.h"

namespace stablemesh {

/// Runs between stages. May move vertices but must not touch connectivity.
using StageHook = std::function<void(TriangleMesh&)>;

struct DecimationConfig {
  CostKind cost = CostKind::qe;
  int target_faces = 4;
  int stages = 1;
  GbCostParams gb;
  /// Drop candidates whose placement reverses a ring triangle.
  bool veto_flips = true;
  /// Run validate() after every k-th collapse; 0 disables.
  int validate_every = 0;
  bool area_weighted_quadrics = false;
  /// Empty means identity.
  StageHook stage_hook;

  /// Throws Error(InvalidArgument).
  void check() const;
};

struct CollapseStep {
  VertexId survivor = -1;
  VertexId retired = -1;
  Vec3 placement;
  double cost = 0.0;
  int faces_after = 0;
};

struct QualitySummary {
  int triangles = 0;
  int degenerate = 0;
  double min_quality = 0.0;
  double mean_quality = 0.0;
  double median_quality = 0.0;
  double p90_quality = 0.0;
  double max_quality = 0.0;
  double well_centered_fraction = 0.0;
};

QualitySummary quality_summary(const TriangleMesh& mesh);

struct StageStats {
  int stage = 0;
  int faces = 0;
  QualitySummary quality;
};

struct DecimationTrace {
  std::vector<CollapseStep> collapses;
  /// Candidate rejections keyed by reason (link_condition, flip, ...).
  std::map<std::string, long> rejections;
  std::vector<StageStats> stages;
  bool queue_exhausted = false;
  int validations = 0;
};

/**
 * Greedy edge-collapse driver over a lazily invalidated binary heap. Each
 * edge carries a version stamp; recomputing an edge bumps the stamp so older
 * heap entries are skipped when popped.
 *
 * The mesh is borrowed and mutated in place.
 */
class Decimator {
 public:
  /// Throws InvalidInput when the mesh is not a closed manifold and
  /// MissingAtoms when a gb cost has no atom set.
  Decimator(TriangleMesh& mesh, std::optional<std::span<const Vec3>> atoms,
            DecimationConfig config);

  /// Candidate for the edge under the current mesh, or nullopt with the
  /// rejection reason written to `reason` when given.
  std::optional<CollapseCandidate> evaluate(VertexId a, VertexId b,
                                            std::string* reason = nullptr) const;

  /// Commits the cheapest valid collapse. Returns false when none is left.
  bool step();

  /// Recomputes every edge with an endpoint in the closed 1-ring of
  /// `survivor`. Returns the number of edges recomputed.
  int refresh_around(VertexId survivor);

  /// Recomputes quadrics and all candidates from scratch.
  void rebuild();

  /// Heap entries that are still current, in no particular order.
  std::vector<CollapseCandidate> live_entries() const;

  const TriangleMesh& mesh() const { return mesh_; }
  const DecimationConfig& config() const { return config_; }
  const DecimationTrace& trace() const { return trace_; }
  DecimationTrace& trace() { return trace_; }

 private:
  std::uint32_t bump(const Edge& e);
  void push_candidate(VertexId a, VertexId b);
  void refresh_quadric(VertexId v);

  TriangleMesh& mesh_;
  DecimationConfig config_;
  std::optional<UniformGrid> grid_;
  std::vector<Quadric> quadrics_;
  std::vector<CollapseCandidate> heap_;
  std::unordered_map<std::uint64_t, std::uint32_t> versions_;
  DecimationTrace trace_;
};

/// Runs `hook` (identity when empty) and throws HookViolation if it changed
/// connectivity or left the mesh invalid.
void apply_stage_hook(TriangleMesh& mesh, const StageHook& hook);

/**
 * Collapses edges in order of increasing cost until the face count reaches
 * config.target_faces or no valid candidate remains (trace.queue_exhausted).
 * With several stages, (F0 - target) / stages faces go per stage, then the
 * stage hook runs and the queue is rebuilt.
 */
DecimationTrace decimate(TriangleMesh& mesh, std::optional<std::span<const Vec3>> atoms,
                         const DecimationConfig& config);

}  // namespace stablemesh
