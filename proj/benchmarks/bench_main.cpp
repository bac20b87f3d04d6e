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

#include <benchmark/benchmark.h>

#include <random>

#include "stablemesh/cost.h"
#include "stablemesh/decimate.h"
#include "stablemesh/gb_energy.h"
#include "stablemesh/grid.h"
#include "stablemesh/shapes.h"

namespace sm = stablemesh;

namespace {

void BM_Decimate(benchmark::State& state, sm::CostKind kind) {
  const sm::shapes::SyntheticMolecule mol = sm::shapes::synthetic_molecule(20, 5);
  const std::vector<sm::Vec3> atoms = sm::centers(mol.atoms);
  sm::DecimationConfig config;
  config.cost = kind;
  config.target_faces = mol.surface.num_triangles() / 10;
  std::size_t collapses = 0;
  for (auto _ : state) {
    state.PauseTiming();
    sm::TriangleMesh mesh = mol.surface;
    state.ResumeTiming();
    collapses += sm::decimate(mesh, atoms, config).collapses.size();
  }
  state.counters["collapses/s"] =
      benchmark::Counter(static_cast<double>(collapses), benchmark::Counter::kIsRate);
}
BENCHMARK_CAPTURE(BM_Decimate, qe, sm::CostKind::qe)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decimate, vol, sm::CostKind::vol)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decimate, pb, sm::CostKind::pb)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decimate, gb_qe, sm::CostKind::gb_qe)->Unit(benchmark::kMillisecond);

void BM_BornRadii(benchmark::State& state) {
  const sm::shapes::SyntheticMolecule mol =
      sm::shapes::synthetic_molecule(static_cast<int>(state.range(0)), 5);
  const std::vector<sm::Vec3> atoms = sm::centers(mol.atoms);
  const auto order = state.range(1) == 1 ? sm::QuadratureOrder::centroid_1pt
                                         : sm::QuadratureOrder::symmetric_3pt;
  for (auto _ : state) benchmark::DoNotOptimize(sm::born_radii(mol.surface, atoms, order));
  state.SetItemsProcessed(state.iterations() * state.range(0) * mol.surface.num_triangles());
}
BENCHMARK(BM_BornRadii)->Args({20, 1})->Args({20, 3})->Args({200, 1})->Unit(benchmark::kMillisecond);

void BM_GridQueryEdge(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  std::vector<sm::Vec3> points(static_cast<std::size_t>(state.range(0)));
  for (sm::Vec3& p : points) p = {u(rng), u(rng), u(rng)};
  const sm::UniformGrid grid(points, 5.0);
  std::vector<std::pair<sm::Vec3, sm::Vec3>> edges(1024);
  for (auto& [a, b] : edges) {
    a = {u(rng), u(rng), u(rng)};
    b = a + sm::Vec3{0.5, 0.3, -0.2};
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = edges[i++ & 1023];
    benchmark::DoNotOptimize(grid.query_edge(a, b, 5.0));
  }
}
BENCHMARK(BM_GridQueryEdge)->Arg(1000)->Arg(10000);

void BM_EdgeStar(benchmark::State& state) {
  const sm::TriangleMesh mesh = sm::shapes::icosphere(5);
  const std::vector<sm::Edge> edges = mesh.edges();
  std::size_t i = 0;
  for (auto _ : state) {
    const sm::Edge& e = edges[i++ % edges.size()];
    benchmark::DoNotOptimize(sm::edge_star(mesh, e.a, e.b));
  }
}
BENCHMARK(BM_EdgeStar);

void BM_Validate(benchmark::State& state) {
  const sm::TriangleMesh mesh = sm::shapes::icosphere(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sm::validate(mesh));
}
BENCHMARK(BM_Validate)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_PolarizationEnergy(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-20.0, 20.0), r(1.0, 3.0), q(-1.0, 1.0);
  std::vector<sm::Atom> atoms(static_cast<std::size_t>(state.range(0)));
  for (sm::Atom& a : atoms) a = {{u(rng), u(rng), u(rng)}, q(rng), 1.5, r(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(sm::polarization_energy(atoms, sm::GBParams{}));
}
BENCHMARK(BM_PolarizationEnergy)->Arg(100)->Arg(2000)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
