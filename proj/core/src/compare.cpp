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

#include "stablemesh/compare.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"
#include "stablemesh/decimate.h"
#include "stablemesh/error.h"
#include "stablemesh/io.h"

namespace stablemesh {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Fills the energy and quality columns for `mesh`.
void measure(const TriangleMesh& mesh, std::span<const Atom> atoms, const CompareParams& params,
             ReportRow& row) {
  std::vector<Atom> scored(atoms.begin(), atoms.end());
  assign_born_radii(mesh, scored, params.quadrature);
  const double scale = params.physical_units ? kCoulombKcalPerMol : 1.0;
  row.g_pol = scale * polarization_energy(scored, params.dielectric);
  row.surface_area = surface_area(mesh);
  row.nonpolar = params.gamma * row.surface_area;
  const QualitySummary q = quality_summary(mesh);
  row.actual_faces = mesh.num_triangles();
  row.min_q = q.min_quality;
  row.mean_q = q.mean_quality;
  row.well_centered_fraction = q.well_centered_fraction;
}

}  // namespace

int resolve_target(std::string_view text, int faces) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty target");
  char* end = nullptr;
  if (s.back() == '%') {
    s.pop_back();
    const double pct = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !(pct > 0.0) || pct > 100.0) {
      throw Error(ErrorCode::InvalidArgument, "bad percentage target '" + std::string(text) + "'");
    }
    return static_cast<int>(std::lround(faces * pct / 100.0));
  }
  const long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size() || v <= 0) {
    throw Error(ErrorCode::InvalidArgument, "bad target '" + std::string(text) + "'");
  }
  return static_cast<int>(v);
}

ComparisonReport run_compare(const TriangleMesh& mesh, std::span<const Atom> atoms,
                             std::span<const CostKind> cost_kinds, std::span<const int> targets,
                             const CompareParams& params) {
  ComparisonReport report;
  const std::vector<Atom> atom_list(atoms.begin(), atoms.end());
  report.metadata["version"] = std::string(kVersion);
  report.metadata["mesh_checksum"] = io::checksum(io::write_off(mesh));
  report.metadata["atoms_checksum"] = io::checksum(io::write_atoms(atom_list));
  report.metadata["mesh_faces"] = std::to_string(mesh.num_triangles());
  report.metadata["atom_count"] = std::to_string(atoms.size());
  report.metadata["rho"] = number(params.gb.rho);
  report.metadata["lambda"] = number(params.gb.lambda);
  report.metadata["eps_p"] = number(params.dielectric.eps_p);
  report.metadata["eps_w"] = number(params.dielectric.eps_w);
  report.metadata["tau"] = number(params.dielectric.tau());
  report.metadata["quadrature"] = std::string(to_string(params.quadrature));
  report.metadata["stages"] = std::to_string(params.stages);
  report.metadata["gamma"] = number(params.gamma);
  report.metadata["energy_units"] = params.physical_units ? "kcal/mol" : "tau*e^2/angstrom";
  report.metadata["nonpolar_model"] = "placeholder: gamma * surface_area";

  const std::vector<Vec3> atom_centers = centers(atoms);
  using Clock = std::chrono::steady_clock;

  ReportRow reference;
  reference.cost_kind = "reference";
  reference.target_faces = mesh.num_triangles();
  {
    const auto start = Clock::now();
    try {
      measure(mesh, atoms, params, reference);
    } catch (const Error& e) {
      reference.status = "failed";
      reference.reason = e.what();
    }
    if (params.timing) {
      reference.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    }
  }
  report.rows.push_back(reference);

  for (CostKind kind : cost_kinds) {
    for (int target : targets) {
      ReportRow row;
      row.cost_kind = std::string(to_string(kind));
      row.target_faces = target;
      const auto start = Clock::now();
      try {
        TriangleMesh work = mesh;
        DecimationConfig config;
        config.cost = kind;
        config.target_faces = target;
        config.stages = params.stages;
        config.gb = params.gb;
        const DecimationTrace trace = decimate(work, std::span<const Vec3>(atom_centers), config);
        row.collapses = static_cast<int>(trace.collapses.size());
        row.queue_exhausted = trace.queue_exhausted;
        measure(work, atoms, params, row);
        if (reference.status == "ok") row.g_pol_deviation = std::abs(row.g_pol - reference.g_pol);
      } catch (const Error& e) {
        row.status = "failed";
        row.reason = e.what();
      }
      if (params.timing) row.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
      report.rows.push_back(row);
    }
  }

  for (int target : targets) {
    std::optional<double> vol;
    double others = -1.0;
    for (const ReportRow& row : report.rows) {
      if (row.target_faces != target || row.status != "ok" || row.cost_kind == "reference") continue;
      if (row.cost_kind == "vol") {
        vol = row.g_pol_deviation;
      } else {
        others = std::max(others, row.g_pol_deviation);
      }
    }
    if (vol && others >= 0.0) report.vol_largest_deviation[target] = *vol > others;
  }
  return report;
}

std::string to_csv(const ComparisonReport& report) {
  std::string out =
      "cost_kind,target_faces,actual_faces,collapses,queue_exhausted,G_pol,G_pol_deviation,"
      "surface_area,nonpolar,min_q,mean_q,well_centered_fraction,wall_time_s,status,reason\n";
  for (const ReportRow& r : report.rows) {
    std::string reason = r.reason;
    for (char& c : reason) {
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    }
    out += r.cost_kind + "," + std::to_string(r.target_faces) + "," +
           std::to_string(r.actual_faces) + "," + std::to_string(r.collapses) + "," +
           (r.queue_exhausted ? "true" : "false") + "," + number(r.g_pol) + "," +
           number(r.g_pol_deviation) + "," + number(r.surface_area) + "," + number(r.nonpolar) +
           "," + number(r.min_q) + "," + number(r.mean_q) + "," +
           number(r.well_centered_fraction) + "," + number(r.wall_time_s) + "," + r.status + "," +
           reason + "\n";
  }
  return out;
}

std::string to_json(const ComparisonReport& report) {
  nlohmann::ordered_json doc;
  doc["metadata"] = report.metadata;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReportRow& r : report.rows) {
    nlohmann::ordered_json row;
    row["cost_kind"] = r.cost_kind;
    row["target_faces"] = r.target_faces;
    row["actual_faces"] = r.actual_faces;
    row["collapses"] = r.collapses;
    row["queue_exhausted"] = r.queue_exhausted;
    row["G_pol"] = r.g_pol;
    row["G_pol_deviation"] = r.g_pol_deviation;
    row["surface_area"] = r.surface_area;
    row["nonpolar"] = r.nonpolar;
    row["min_q"] = r.min_q;
    row["mean_q"] = r.mean_q;
    row["well_centered_fraction"] = r.well_centered_fraction;
    row["wall_time_s"] = r.wall_time_s;
    row["status"] = r.status;
    row["reason"] = r.reason;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  nlohmann::ordered_json info = nlohmann::ordered_json::object();
  for (auto [target, holds] : report.vol_largest_deviation) info[std::to_string(target)] = holds;
  doc["informational"]["vol_largest_energy_deviation"] = std::move(info);
  return doc.dump(2) + "\n";
}

}  // namespace stablemesh
