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

#ifndef ASSOCMWE_REPORT_H_
#define ASSOCMWE_REPORT_H_

#include <span>
#include <string>

#include "assocmwe/classifier.h"
#include "assocmwe/corpus.h"
#include "assocmwe/metrics.h"

namespace assocmwe {

enum class OutputFormat { kTsv, kJson };

struct ReportRow {
  PhraseMetrics metrics;
  GoldLabel gold_label = GoldLabel::kNonThesaurus;
  ClassificationResult verdict;
};

// Rounds half away from zero to two decimals.
double Round2(double value);

// Table of phrase statistics, one section per gold label (thesaurus first).
// Within a section rows are sorted by ascending entropy, ties by phrase, and
// followed by an Average row. Each section states the entropy threshold for
// its respondent count(s). Entropies, thresholds and averages are rounded to
// two decimals. The output depends only on the set of rows, not their order.
std::string RenderReport(std::span<const ReportRow> rows, OutputFormat format);

}  // namespace assocmwe

#endif  // ASSOCMWE_REPORT_H_
