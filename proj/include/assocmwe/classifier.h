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

#ifndef ASSOCMWE_CLASSIFIER_H_
#define ASSOCMWE_CLASSIFIER_H_

// Two-sign conventionalization test over phrase association metrics.
//
// Rule A (association idiosyncrasy): the components evoke each other often,
//   max(a12, a21) >= mutual_min.
// Rule B (relational idiosyncrasy): the phrase responses are concentrated and
//   mostly its own, entropy < entropy_factor * log2(respondent_count_phrase)
//   and (ph1 + ph2) / phrase_responses < overlap_fraction_max.
// A phrase is conventionalized if either rule fires; rule A is reported when
// both do.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assocmwe/corpus.h"
#include "assocmwe/metrics.h"

namespace assocmwe {

struct Thresholds {
  double entropy_factor = 0.8;
  double overlap_fraction_max = 0.20;
  int mutual_min = 10;

  // Throws DomainError unless entropy_factor and overlap_fraction_max lie in
  // (0, 1] and mutual_min >= 1.
  void Validate() const;
};

enum class Rule { kNone, kAssociationIdiosyncrasy, kRelationalIdiosyncrasy };

std::string_view ToString(Rule rule);

struct ClassificationResult {
  std::string phrase;
  bool conventionalized = false;
  Rule rule = Rule::kNone;
  double entropy_bits = 0.0;
  double entropy_threshold_bits = 0.0;
  // (ph1 + ph2) / phrase_responses. Can exceed 1 when both components share
  // the same phrase responses.
  double overlap_fraction = 0.0;
  int mutual_max = 0;

  bool operator==(const ClassificationResult &) const = default;
};

// Throws DomainError if the phrase has no responses. Thresholds are used as
// given (not validated) so that degenerate settings can be explored.
ClassificationResult Classify(const PhraseMetrics &m, const Thresholds &t);

struct GroupStats {
  std::string label;
  size_t size = 0;
  double mean_a12 = 0.0;
  double mean_a21 = 0.0;
  double mean_ph1 = 0.0;
  double mean_ph2 = 0.0;
  double mean_entropy = 0.0;
};

// Column means. Throws DomainError on an empty input.
GroupStats GroupAverages(std::span<const PhraseMetrics> rows,
                         std::string label = "");

// Fraction of results whose verdict equals (gold_label == thesaurus). Throws
// ConsistencyError if a result has no registry entry, DomainError if empty.
double Accuracy(std::span<const ClassificationResult> results,
                std::span<const PhraseEntry> registry);

}  // namespace assocmwe

#endif  // ASSOCMWE_CLASSIFIER_H_
