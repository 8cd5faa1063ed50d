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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <vector>

#include "json.hpp"

namespace assocmwe {

namespace {

std::string Fixed2(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", Round2(value));
  return buf;
}

bool ByEntropy(const ReportRow *a, const ReportRow *b) {
  if (a->metrics.entropy_bits != b->metrics.entropy_bits) {
    return a->metrics.entropy_bits < b->metrics.entropy_bits;
  }
  return a->metrics.phrase < b->metrics.phrase;
}

struct Section {
  GoldLabel label;
  std::vector<const ReportRow *> rows;
  std::set<int> respondent_counts;
  GroupStats average;
};

std::vector<Section> Sections(std::span<const ReportRow> rows) {
  std::vector<Section> sections;
  for (GoldLabel label : {GoldLabel::kThesaurus, GoldLabel::kNonThesaurus}) {
    Section s{label, {}, {}, {}};
    for (const ReportRow &r : rows) {
      if (r.gold_label != label) continue;
      s.rows.push_back(&r);
      s.respondent_counts.insert(r.metrics.respondent_count_phrase);
    }
    if (s.rows.empty()) continue;
    std::sort(s.rows.begin(), s.rows.end(), ByEntropy);
    std::vector<PhraseMetrics> metrics;
    for (const ReportRow *r : s.rows) metrics.push_back(r->metrics);
    s.average = GroupAverages(metrics, std::string(ToString(label)));
    sections.push_back(std::move(s));
  }
  return sections;
}

// Threshold the verdicts were computed with.
double ThresholdFor(const Section &s, int respondents) {
  for (const ReportRow *r : s.rows) {
    if (r->metrics.respondent_count_phrase == respondents) {
      return r->verdict.entropy_threshold_bits;
    }
  }
  return 0.0;
}

std::string RenderTsv(const std::vector<Section> &sections) {
  std::string out;
  for (size_t i = 0; i < sections.size(); ++i) {
    const Section &s = sections[i];
    if (i > 0) out += '\n';
    out += "# ";
    out += ToString(s.label);
    out += ": " + std::to_string(s.rows.size()) + " phrases";
    for (int n : s.respondent_counts) {
      out += ", entropy threshold " + Fixed2(ThresholdFor(s, n)) + " bits (" +
             std::to_string(n) + " respondents)";
    }
    out += '\n';
    out += "phrase\ta12\ta21\tph1\tph2\tentropy\trule\n";
    for (const ReportRow *r : s.rows) {
      const PhraseMetrics &m = r->metrics;
      out += m.phrase + '\t' + std::to_string(m.a12) + '\t' +
             std::to_string(m.a21) + '\t' + std::to_string(m.ph1) + '\t' +
             std::to_string(m.ph2) + '\t' + Fixed2(m.entropy_bits) + '\t' +
             std::string(ToString(r->verdict.rule)) + '\n';
    }
    const GroupStats &a = s.average;
    out += "Average\t" + Fixed2(a.mean_a12) + '\t' + Fixed2(a.mean_a21) + '\t' +
           Fixed2(a.mean_ph1) + '\t' + Fixed2(a.mean_ph2) + '\t' +
           Fixed2(a.mean_entropy) + "\t\n";
  }
  return out;
}

std::string RenderJson(const std::vector<Section> &sections) {
  using Json = nlohmann::ordered_json;
  Json groups = Json::array();
  for (const Section &s : sections) {
    Json g;
    g["label"] = ToString(s.label);
    Json thresholds = Json::array();
    for (int n : s.respondent_counts) {
      thresholds.push_back(
          {{"respondent_count", n}, {"entropy_threshold_bits", Round2(ThresholdFor(s, n))}});
    }
    g["thresholds"] = thresholds;
    Json rows = Json::array();
    for (const ReportRow *r : s.rows) {
      const PhraseMetrics &m = r->metrics;
      rows.push_back({{"phrase", m.phrase},
                      {"a12", m.a12},
                      {"a21", m.a21},
                      {"ph1", m.ph1},
                      {"ph2", m.ph2},
                      {"entropy", Round2(m.entropy_bits)},
                      {"rule", ToString(r->verdict.rule)}});
    }
    g["rows"] = rows;
    const GroupStats &a = s.average;
    g["average"] = {{"a12", Round2(a.mean_a12)},
                    {"a21", Round2(a.mean_a21)},
                    {"ph1", Round2(a.mean_ph1)},
                    {"ph2", Round2(a.mean_ph2)},
                    {"entropy", Round2(a.mean_entropy)}};
    groups.push_back(std::move(g));
  }
  return Json{{"groups", groups}}.dump(2) + "\n";
}

}  // namespace

double Round2(double value) {
  double r = std::round(value * 100.0) / 100.0;
  return r == 0.0 ? 0.0 : r;
}

std::string RenderReport(std::span<const ReportRow> rows, OutputFormat format) {
  std::vector<Section> sections = Sections(rows);
  return format == OutputFormat::kJson ? RenderJson(sections) : RenderTsv(sections);
}

}  // namespace assocmwe
