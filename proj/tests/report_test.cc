// Copyright 2026 The assocmwe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "assocmwe/report.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

namespace assocmwe {
namespace {

std::vector<ReportRow> Rows(const std::string &fixture) {
  std::vector<ReportRow> rows;
  for (const MetricsRow &r : LoadMetricsFixture(
           ReadFile(std::string(ASSOCMWE_DATA_DIR) + "/fixtures/" + fixture))) {
    rows.push_back({r.metrics, r.gold_label, Classify(r.metrics, {})});
  }
  return rows;
}

std::vector<std::string> Lines(const std::string &text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(RenderReportTest, ThesaurusTableLayout) {
  auto lines = Lines(RenderReport(Rows("table2.csv"), OutputFormat::kTsv));
  ASSERT_EQ(lines.size(), 18u);  // section header, column header, 15 rows, Average
  EXPECT_EQ(lines[0], "# thesaurus: 15 phrases, entropy threshold 3.76 bits (26 respondents)");
  EXPECT_EQ(lines[2], "транспортное происшествие\t0\t7\t0\t6\t2.16\tnone");
  EXPECT_EQ(lines[15], "мобильный телефон\t26\t12\t3\t7\t3.81\tassociation_idiosyncrasy");
  EXPECT_EQ(lines[16], "температура воздуха\t4\t0\t6\t1\t3.81\tnone");
  EXPECT_EQ(lines[17], "Average\t11.00\t6.93\t1.93\t3.00\t3.24\t");
}

TEST(RenderReportTest, GroupsAndThresholds) {
  std::string text = RenderReport(Rows("tables23.csv"), OutputFormat::kTsv);
  EXPECT_NE(text.find("# thesaurus: 15 phrases, entropy threshold 3.76 bits"), std::string::npos);
  EXPECT_NE(text.find("# non_thesaurus: 18 phrases, entropy threshold 3.89 bits (29 respondents)"),
            std::string::npos);
}

TEST(RenderReportTest, SingleRow) {
  auto rows = Rows("table2.csv");
  rows.resize(1);
  auto lines = Lines(RenderReport(rows, OutputFormat::kTsv));
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[3], "Average\t0.00\t7.00\t0.00\t6.00\t2.16\t");
}

TEST(RenderReportTest, OrderIndependent) {
  auto rows = Rows("tables23.csv");
  const std::string expected = RenderReport(rows, OutputFormat::kTsv);
  std::mt19937 rng(61);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(RenderReport(rows, OutputFormat::kTsv), expected);
  }
}

TEST(RenderReportTest, JsonMatchesTsv) {
  auto rows = Rows("tables23.csv");
  auto doc = nlohmann::json::parse(RenderReport(rows, OutputFormat::kJson));
  auto lines = Lines(RenderReport(rows, OutputFormat::kTsv));
  // Data lines of the tsv, in order, skipping headers, blanks and averages.
  std::vector<std::string> tsv_rows;
  for (const std::string &l : lines) {
    if (l.empty() || l[0] == '#' || l.rfind("phrase\t", 0) == 0 || l.rfind("Average\t", 0) == 0) {
      continue;
    }
    tsv_rows.push_back(l);
  }
  std::vector<std::string> json_rows;
  for (const auto &group : doc["groups"]) {
    for (const auto &r : group["rows"]) {
      char entropy[32];
      std::snprintf(entropy, sizeof(entropy), "%.2f", r["entropy"].get<double>());
      json_rows.push_back(r["phrase"].get<std::string>() + "\t" + std::to_string(r["a12"].get<int>()) +
                          "\t" + std::to_string(r["a21"].get<int>()) + "\t" +
                          std::to_string(r["ph1"].get<int>()) + "\t" +
                          std::to_string(r["ph2"].get<int>()) + "\t" + entropy + "\t" +
                          r["rule"].get<std::string>());
    }
  }
  EXPECT_EQ(json_rows, tsv_rows);
  EXPECT_DOUBLE_EQ(doc["groups"][0]["average"]["a21"].get<double>(), 6.93);
  EXPECT_DOUBLE_EQ(doc["groups"][1]["thresholds"][0]["entropy_threshold_bits"].get<double>(), 3.89);
}

TEST(Round2Test, Values) {
  EXPECT_EQ(Round2(3.7603), 3.76);
  EXPECT_EQ(Round2(3.8864), 3.89);
  EXPECT_EQ(Round2(-0.001), 0.0);
}

}  // namespace
}  // namespace assocmwe
