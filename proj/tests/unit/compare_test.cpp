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

#include <sstream>

#include "json.hpp"
#include "stablemesh/compare.h"
#include "stablemesh/error.h"
#include "stablemesh/shapes.h"

namespace stablemesh {
namespace {

TEST(ResolveTarget, PercentAndCount) {
  EXPECT_EQ(resolve_target("50%", 1000), 500);
  EXPECT_EQ(resolve_target("10%", 5120), 512);
  EXPECT_EQ(resolve_target("300", 1000), 300);
  EXPECT_THROW(resolve_target("abc", 1000), Error);
  EXPECT_THROW(resolve_target("0%", 1000), Error);
}

class CompareTest : public ::testing::Test {
 protected:
  void SetUp() override { mol_ = shapes::synthetic_molecule(20, 3); }
  shapes::SyntheticMolecule mol_;
};

TEST_F(CompareTest, RowCount) {
  const std::vector<CostKind> kinds{CostKind::qe, CostKind::vol, CostKind::gb_qe};
  const int f = mol_.surface.num_triangles();
  const std::vector<int> targets{f / 2, f / 4, f / 10};
  CompareParams params;
  params.timing = false;
  const ComparisonReport report = run_compare(mol_.surface, mol_.atoms, kinds, targets, params);
  ASSERT_EQ(report.rows.size(), 10u);
  EXPECT_EQ(report.rows[0].cost_kind, "reference");
  EXPECT_EQ(report.rows[0].actual_faces, f);
  EXPECT_EQ(report.rows[0].g_pol_deviation, 0.0);
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const ReportRow& r = report.rows[i];
    EXPECT_EQ(r.status, "ok") << r.reason;
    EXPECT_EQ(r.cost_kind, to_string(kinds[(i - 1) / 3]));
    EXPECT_EQ(r.target_faces, targets[(i - 1) % 3]);
    EXPECT_LE(r.actual_faces, r.target_faces);
    EXPECT_EQ(r.g_pol_deviation, std::abs(r.g_pol - report.rows[0].g_pol));
    EXPECT_LT(r.g_pol, 0.0);
  }
  EXPECT_EQ(report.vol_largest_deviation.size(), 3u);
  EXPECT_EQ(report.metadata.at("rho"), "5");
  EXPECT_EQ(report.metadata.at("lambda"), "1e-08");
}

TEST_F(CompareTest, EmptyKindsGiveReferenceOnly) {
  const ComparisonReport report = run_compare(mol_.surface, mol_.atoms, {}, {}, CompareParams{});
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].cost_kind, "reference");
}

TEST_F(CompareTest, FailedCellsAreRecorded) {
  const std::vector<CostKind> kinds{CostKind::qe};
  const std::vector<int> targets{2};
  const ComparisonReport report =
      run_compare(mol_.surface, mol_.atoms, kinds, targets, CompareParams{});
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[1].status, "failed");
  EXPECT_FALSE(report.rows[1].reason.empty());
}

TEST_F(CompareTest, CsvAndJsonAgree) {
  const std::vector<CostKind> kinds{CostKind::qe, CostKind::gb_qe};
  const std::vector<int> targets{300};
  CompareParams params;
  params.timing = false;
  const ComparisonReport report = run_compare(mol_.surface, mol_.atoms, kinds, targets, params);
  const auto json = nlohmann::json::parse(to_json(report));
  const std::string csv = to_csv(report);
  std::vector<std::vector<std::string>> table;
  std::stringstream lines(csv);
  for (std::string line; std::getline(lines, line);) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    table.push_back(cells);
  }
  ASSERT_EQ(table.size(), report.rows.size() + 1);
  const auto& header = table[0];
  ASSERT_EQ(json["rows"].size(), report.rows.size());
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& row = json["rows"][i];
    for (std::size_t c = 0; c < header.size(); ++c) {
      const auto& value = row.at(header[c]);
      if (value.is_number_float()) {
        EXPECT_EQ(std::stod(table[i + 1][c]), value.get<double>()) << header[c];
      } else if (value.is_number_integer()) {
        EXPECT_EQ(std::stol(table[i + 1][c]), value.get<long>()) << header[c];
      } else if (value.is_boolean()) {
        EXPECT_EQ(table[i + 1][c], value.get<bool>() ? "true" : "false") << header[c];
      } else {
        EXPECT_EQ(table[i + 1][c], value.get<std::string>()) << header[c];
      }
    }
  }
}

TEST_F(CompareTest, ReproducibleWithoutTiming) {
  const std::vector<CostKind> kinds{CostKind::vol};
  const std::vector<int> targets{400};
  CompareParams params;
  params.timing = false;
  EXPECT_EQ(to_json(run_compare(mol_.surface, mol_.atoms, kinds, targets, params)),
            to_json(run_compare(mol_.surface, mol_.atoms, kinds, targets, params)));
}

}  // namespace
}  // namespace stablemesh
