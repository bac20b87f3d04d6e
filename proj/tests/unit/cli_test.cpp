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

#include <filesystem>
#include <sstream>

#include "cli.h"
#include "json.hpp"
#include "stablemesh/io.h"
#include "stablemesh/shapes.h"

namespace stablemesh {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("stablemesh_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
    io::write_file(path("tet.off"), io::write_off(shapes::tetrahedron()));
    io::write_file(path("sphere.off"), io::write_off(shapes::icosphere(3)));
    io::write_file(path("center.atoms"), "# one unit charge\n0 0 0 1 1.5\n");
    const auto mol = shapes::synthetic_molecule(20, 3);
    io::write_file(path("mol.off"), io::write_off(mol.surface));
    io::write_file(path("mol.atoms"), io::write_atoms(mol.atoms));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, ValidateTetrahedron) {
  const CliResult r = run({"validate", "--mesh", path("tet.off")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("V 4\nE 6\nF 4\nchi 2\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, ValidateBadMeshIsInputError) {
  io::write_file(path("bad.off"), "OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  const CliResult r = run({"validate", "--mesh", path("bad.off")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NonManifoldEdge"), std::string::npos) << r.err;
}

TEST_F(CliTest, DecimateGbWithoutAtoms) {
  const CliResult r = run({"decimate", "--mesh", path("sphere.off"), "--cost", "gb", "--target-faces",
                     "100", "--out", path("out.off")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("MissingAtoms"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("--atoms"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrorsNameTheFlag) {
  CliResult r = run({"decimate", "--mesh", path("sphere.off"), "--cost", "fancy", "--target-faces", "100",
               "--out", path("out.off")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--cost"), std::string::npos) << r.err;

  r = run({"decimate", "--mesh", path("sphere.off"), "--out", path("out.off")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--target-faces"), std::string::npos) << r.err;

  r = run({"energy", "--mesh", path("sphere.off"), "--atoms", path("center.atoms"), "--eps-p",
           "soft"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--eps-p"), std::string::npos) << r.err;

  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, DecimateWritesMeshAndTrace) {
  const CliResult r = run({"decimate", "--mesh", path("sphere.off"), "--cost", "qe", "--target-faces",
                     "320", "--stages", "2", "--out", path("out.off"), "--trace",
                     path("trace.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const TriangleMesh out = io::load_mesh(path("out.off"));
  EXPECT_EQ(out.num_triangles(), 320);
  const auto trace = nlohmann::json::parse(io::read_file(path("trace.json")));
  EXPECT_EQ(trace["collapses"].size(), 480u);
  EXPECT_EQ(trace["stages"].size(), 2u);
}

TEST_F(CliTest, DecimateGbQeWithAtoms) {
  const CliResult r = run({"decimate", "--mesh", path("mol.off"), "--atoms", path("mol.atoms"), "--cost",
                     "gb_qe", "--target-faces", "400", "--rho", "5", "--lambda", "1e-8", "--out",
                     path("out.off")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(io::load_mesh(path("out.off")).num_triangles(), 400);
}

TEST_F(CliTest, EnergyOfCenteredUnitCharge) {
  const CliResult r = run({"energy", "--mesh", path("sphere.off"), "--atoms", path("center.atoms"),
                     "--eps-p", "1", "--eps-w", "inf"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto pos = r.out.find("G_pol ");
  ASSERT_NE(pos, std::string::npos) << r.out;
  EXPECT_NEAR(std::stod(r.out.substr(pos + 6)), -0.5, 0.01);
}

TEST_F(CliTest, EnergyNumericalFailure) {
  io::write_file(path("outside.atoms"), "0 0 0 1 1\n5 0 0 1 1\n");
  const CliResult r = run({"energy", "--mesh", path("sphere.off"), "--atoms", path("outside.atoms")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NonPositiveIntegral"), std::string::npos) << r.err;
}

TEST_F(CliTest, CompareIsReproducible) {
  const std::vector<std::string> args{"compare", "--mesh", path("mol.off"), "--atoms",
                                      path("mol.atoms"), "--costs", "qe,vol,gb_qe", "--targets",
                                      "50%,25%,10%", "--no-timing", "--report"};
  auto with_report = [&](const std::string& name) {
    std::vector<std::string> a = args;
    a.push_back(path(name));
    return run(a);
  };
  ASSERT_EQ(with_report("a.json").code, 0);
  ASSERT_EQ(with_report("b.json").code, 0);
  EXPECT_EQ(io::read_file(path("a.json")), io::read_file(path("b.json")));
  ASSERT_EQ(with_report("a.csv").code, 0);
  const auto json = nlohmann::json::parse(io::read_file(path("a.json")));
  EXPECT_EQ(json["rows"].size(), 10u);
  EXPECT_TRUE(json["metadata"].contains("mesh_checksum"));
}

}  // namespace
}  // namespace stablemesh
