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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "stablemesh/compare.h"
#include "stablemesh/cost.h"
#include "stablemesh/decimate.h"
#include "stablemesh/error.h"
#include "stablemesh/gb_energy.h"
#include "stablemesh/io.h"
#include "stablemesh/mesh.h"
#include "stablemesh/shapes.h"

namespace stablemesh::cli {

namespace {

std::string fmt(double v, int digits = 12) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct ValidateArgs {
  std::string mesh;
};

struct DecimateArgs {
  std::string mesh;
  std::string atoms;
  std::string cost = "qe";
  int target_faces = 0;
  double rho = 5.0;
  double lambda = 1e-8;
  bool auto_lambda = false;
  int stages = 1;
  std::string gb_variant = "edge";
  bool allow_flips = false;
  int validate_every = 0;
  std::string out;
  std::string trace;
};

struct EnergyArgs {
  std::string mesh;
  std::string atoms;
  std::string quadrature = "1pt";
  double eps_p = 1.0;
  double eps_w = 80.0;
  double gamma = kDefaultSurfaceTension;
  bool kcal = false;
  bool radii = false;
};

struct CompareArgs {
  std::string mesh;
  std::string atoms;
  std::string costs = "qe,vol,gb_qe";
  std::string targets = "50%,25%,10%";
  std::string report;
  double rho = 5.0;
  double lambda = 1e-8;
  int stages = 1;
  std::string quadrature = "1pt";
  double eps_p = 1.0;
  double eps_w = 80.0;
  bool kcal = false;
  bool no_timing = false;
};

struct GenerateArgs {
  std::string shape = "icosphere";
  int level = 3;
  double radius = 1.0;
  int atoms = 20;
  unsigned long seed = 7;
  std::string out;
  std::string atoms_out;
};

int run_validate(const ValidateArgs& a, std::ostream& out) {
  const TriangleMesh mesh = io::load_mesh(a.mesh);
  const MeshStats s = validate(mesh);
  out << "V " << s.vertices << "\nE " << s.edges << "\nF " << s.faces << "\nchi "
      << s.euler_characteristic << "\nclosed_manifold " << (s.is_closed_manifold ? "yes" : "no")
      << "\n";
  if (s.unreferenced_vertices > 0) {
    out << "warning: " << s.unreferenced_vertices << " unreferenced vertices\n";
  }
  return kExitOk;
}

int run_decimate(const DecimateArgs& a, std::ostream& out) {
  TriangleMesh mesh = io::load_mesh(a.mesh);
  DecimationConfig config;
  config.cost = parse_cost_kind(a.cost);
  config.target_faces = a.target_faces;
  config.stages = a.stages;
  config.gb.rho = a.rho;
  config.gb.lambda = a.lambda;
  config.gb.variant = a.gb_variant == "qe" ? GbVariant::qe_term : GbVariant::edge_length;
  config.veto_flips = !a.allow_flips;
  config.validate_every = a.validate_every;

  std::optional<std::vector<Vec3>> atom_centers;
  if (!a.atoms.empty()) atom_centers = centers(io::parse_atoms(io::read_file(a.atoms)));
  if (needs_atoms(config.cost) && !atom_centers) {
    throw Error(ErrorCode::MissingAtoms,
                "--cost " + a.cost + " requires --atoms");
  }
  if (a.auto_lambda && atom_centers) {
    config.gb.lambda = auto_lambda(mesh, *atom_centers, config.gb);
  }

  std::optional<std::span<const Vec3>> atoms;
  if (atom_centers) atoms = std::span<const Vec3>(*atom_centers);
  const int initial = mesh.num_triangles();
  const DecimationTrace trace = decimate(mesh, atoms, config);
  io::write_file(a.out, io::write_off(mesh));

  out << "cost " << a.cost << "\nfaces " << initial << " -> " << mesh.num_triangles()
      << "\ncollapses " << trace.collapses.size() << "\nqueue_exhausted "
      << (trace.queue_exhausted ? "yes" : "no") << "\n";
  if (needs_atoms(config.cost)) out << "lambda " << fmt(config.gb.lambda) << "\n";

  if (!a.trace.empty()) {
    nlohmann::ordered_json doc;
    doc["cost"] = a.cost;
    doc["initial_faces"] = initial;
    doc["final_faces"] = mesh.num_triangles();
    doc["queue_exhausted"] = trace.queue_exhausted;
    doc["rejections"] = trace.rejections;
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (const StageStats& s : trace.stages) {
      stages.push_back({{"stage", s.stage},
                        {"faces", s.faces},
                        {"min_q", s.quality.min_quality},
                        {"mean_q", s.quality.mean_quality},
                        {"median_q", s.quality.median_quality},
                        {"p90_q", s.quality.p90_quality},
                        {"max_q", s.quality.max_quality},
                        {"well_centered_fraction", s.quality.well_centered_fraction}});
    }
    doc["stages"] = std::move(stages);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const CollapseStep& c : trace.collapses) {
      records.push_back({c.survivor, c.retired, c.placement.x, c.placement.y, c.placement.z,
                         c.cost, c.faces_after});
    }
    doc["collapse_columns"] = {"survivor", "retired", "x", "y", "z", "cost", "faces_after"};
    doc["collapses"] = std::move(records);
    io::write_file(a.trace, doc.dump(1) + "\n");
  }
  return kExitOk;
}

int run_energy(const EnergyArgs& a, std::ostream& out) {
  const TriangleMesh mesh = io::load_mesh(a.mesh);
  std::vector<Atom> atoms = io::parse_atoms(io::read_file(a.atoms));
  GBParams params{a.eps_p, a.eps_w};
  params.check();
  const QuadratureOrder order = parse_quadrature(a.quadrature);
  assign_born_radii(mesh, atoms, order);
  const double scale = a.kcal ? kCoulombKcalPerMol : 1.0;
  const double g_pol = scale * polarization_energy(atoms, params);
  const double area = surface_area(mesh);

  out << "atoms " << atoms.size() << "\nquadrature " << to_string(order) << "\ntau "
      << fmt(params.tau()) << "\nunits " << (a.kcal ? "kcal/mol" : "tau*e^2/angstrom")
      << "\nG_pol " << fmt(g_pol) << "\nsurface_area " << fmt(area)
      << "\nnonpolar_placeholder " << fmt(a.gamma * area) << "\n";
  if (a.radii) {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      out << "born_radius " << i << " " << fmt(atoms[i].born_radius) << "\n";
    }
  }
  return kExitOk;
}

int run_compare_cmd(const CompareArgs& a, std::ostream& out) {
  const TriangleMesh mesh = io::load_mesh(a.mesh);
  const std::vector<Atom> atoms = io::parse_atoms(io::read_file(a.atoms));
  std::vector<CostKind> kinds;
  for (const std::string& k : split_list(a.costs)) kinds.push_back(parse_cost_kind(k));
  std::vector<int> targets;
  for (const std::string& t : split_list(a.targets)) {
    targets.push_back(resolve_target(t, mesh.num_triangles()));
  }
  CompareParams params;
  params.gb.rho = a.rho;
  params.gb.lambda = a.lambda;
  params.gb.check();
  params.dielectric = {a.eps_p, a.eps_w};
  params.dielectric.check();
  params.quadrature = parse_quadrature(a.quadrature);
  params.stages = a.stages;
  params.physical_units = a.kcal;
  params.timing = !a.no_timing;

  const ComparisonReport report = run_compare(mesh, atoms, kinds, targets, params);
  const bool json = a.report.ends_with(".json");
  io::write_file(a.report, json ? to_json(report) : to_csv(report));

  for (const ReportRow& r : report.rows) {
    out << r.cost_kind << " target=" << r.target_faces << " faces=" << r.actual_faces;
    if (r.status == "ok") {
      out << " G_pol=" << fmt(r.g_pol) << " dev=" << fmt(r.g_pol_deviation, 6);
    } else {
      out << " FAILED " << r.reason;
    }
    out << "\n";
  }
  out << "rows " << report.rows.size() << "\n";
  return kExitOk;
}

int run_generate(const GenerateArgs& a, std::ostream& out) {
  if (a.shape == "molecule") {
    shapes::SyntheticMolecule mol = shapes::synthetic_molecule(a.atoms, a.level, a.seed);
    io::write_file(a.out, io::write_off(mol.surface));
    if (!a.atoms_out.empty()) io::write_file(a.atoms_out, io::write_atoms(mol.atoms));
    out << "faces " << mol.surface.num_triangles() << "\natoms " << mol.atoms.size() << "\n";
    return kExitOk;
  }
  TriangleMesh mesh;
  if (a.shape == "icosphere") {
    mesh = shapes::icosphere(a.level, a.radius);
  } else if (a.shape == "geodesic") {
    mesh = shapes::geodesic_sphere(a.level, a.radius);
  } else if (a.shape == "octahedron") {
    mesh = shapes::octahedron();
  } else if (a.shape == "tetrahedron") {
    mesh = shapes::tetrahedron();
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown shape '" + a.shape + "'");
  }
  io::write_file(a.out, io::write_off(mesh));
  out << "faces " << mesh.num_triangles() << "\n";
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Function-aware surface mesh decimation and Generalized Born energetics",
               "stablemesh"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate_cmd = app.add_subcommand("validate", "Check a mesh is a closed oriented manifold");
  validate_cmd->add_option("--mesh", va.mesh, "OFF or OBJ mesh")->required();

  DecimateArgs da;
  auto* decimate_cmd = app.add_subcommand("decimate", "Greedy edge-collapse decimation");
  decimate_cmd->add_option("--mesh", da.mesh, "Input mesh")->required();
  decimate_cmd->add_option("--cost", da.cost, "qe | vol | pb | gb | gb_qe")
      ->check(CLI::IsMember({"qe", "vol", "pb", "gb", "gb_qe"}));
  decimate_cmd->add_option("--target-faces", da.target_faces, "Face budget")->required();
  decimate_cmd->add_option("--atoms", da.atoms, "Atom file (x y z q R_vdw)");
  decimate_cmd->add_option("--rho", da.rho, "Near-atom radius");
  decimate_cmd->add_option("--lambda", da.lambda, "Weight of the atom-centre term");
  decimate_cmd->add_flag("--auto-lambda", da.auto_lambda, "Balance the gb terms from samples");
  decimate_cmd->add_option("--stages", da.stages, "Number of stages");
  decimate_cmd->add_option("--gb-variant", da.gb_variant, "edge | qe")
      ->check(CLI::IsMember({"edge", "qe"}));
  decimate_cmd->add_flag("--allow-flips", da.allow_flips, "Do not veto triangle flips");
  decimate_cmd->add_option("--validate-every", da.validate_every,
                           "Validate every k collapses (0 = off)");
  decimate_cmd->add_option("--out", da.out, "Output OFF")->required();
  decimate_cmd->add_option("--trace", da.trace, "Write a JSON trace");

  EnergyArgs ea;
  auto* energy_cmd = app.add_subcommand("energy", "Born radii and polarization energy");
  energy_cmd->add_option("--mesh", ea.mesh, "Surface mesh")->required();
  energy_cmd->add_option("--atoms", ea.atoms, "Atom file")->required();
  energy_cmd->add_option("--quadrature", ea.quadrature, "1pt | 3pt")
      ->check(CLI::IsMember({"1pt", "3pt", "centroid_1pt", "symmetric_3pt"}));
  energy_cmd->add_option("--eps-p", ea.eps_p, "Solute dielectric");
  energy_cmd->add_option("--eps-w", ea.eps_w, "Solvent dielectric");
  energy_cmd->add_option("--gamma", ea.gamma, "Non-polar placeholder coefficient");
  energy_cmd->add_flag("--kcal", ea.kcal, "Report kcal/mol");
  energy_cmd->add_flag("--radii", ea.radii, "Print every Born radius");

  CompareArgs ca;
  auto* compare_cmd = app.add_subcommand("compare", "Cost-function comparison sweep");
  compare_cmd->add_option("--mesh", ca.mesh, "Surface mesh")->required();
  compare_cmd->add_option("--atoms", ca.atoms, "Atom file")->required();
  compare_cmd->add_option("--costs", ca.costs, "Comma-separated cost kinds");
  compare_cmd->add_option("--targets", ca.targets, "Comma-separated face counts or percentages");
  compare_cmd->add_option("--report", ca.report, "Report path (.csv or .json)")->required();
  compare_cmd->add_option("--rho", ca.rho, "Near-atom radius");
  compare_cmd->add_option("--lambda", ca.lambda, "Weight of the atom-centre term");
  compare_cmd->add_option("--stages", ca.stages, "Stages per decimation");
  compare_cmd->add_option("--quadrature", ca.quadrature, "1pt | 3pt")
      ->check(CLI::IsMember({"1pt", "3pt", "centroid_1pt", "symmetric_3pt"}));
  compare_cmd->add_option("--eps-p", ca.eps_p, "Solute dielectric");
  compare_cmd->add_option("--eps-w", ca.eps_w, "Solvent dielectric");
  compare_cmd->add_flag("--kcal", ca.kcal, "Report kcal/mol");
  compare_cmd->add_flag("--no-timing", ca.no_timing, "Zero the wall-time column");

  GenerateArgs ga;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic test surface");
  generate_cmd->add_option("--shape", ga.shape, "icosphere | geodesic | octahedron | tetrahedron | molecule");
  generate_cmd->add_option("--level", ga.level, "Subdivision level (geodesic: frequency)");
  generate_cmd->add_option("--radius", ga.radius, "Sphere radius");
  generate_cmd->add_option("--atoms", ga.atoms, "Atom count for --shape molecule");
  generate_cmd->add_option("--seed", ga.seed, "Random seed");
  generate_cmd->add_option("--out", ga.out, "Output OFF")->required();
  generate_cmd->add_option("--atoms-out", ga.atoms_out, "Atom file for --shape molecule");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*validate_cmd) return run_validate(va, out);
    if (*decimate_cmd) return run_decimate(da, out);
    if (*energy_cmd) return run_energy(ea, out);
    if (*compare_cmd) return run_compare_cmd(ca, out);
    if (*generate_cmd) return run_generate(ga, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_numerical(e.code()) ? kExitNumerical : kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace stablemesh::cli
