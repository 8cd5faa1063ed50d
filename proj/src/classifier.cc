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

#include "assocmwe/classifier.h"

#include <algorithm>
#include <map>

#include "assocmwe/error.h"

namespace assocmwe {

void Thresholds::Validate() const {
  if (!(entropy_factor > 0.0 && entropy_factor <= 1.0)) {
    throw DomainError("entropy_factor must lie in (0, 1]");
  }
  if (!(overlap_fraction_max > 0.0 && overlap_fraction_max <= 1.0)) {
    throw DomainError("overlap_fraction_max must lie in (0, 1]");
  }
  if (mutual_min < 1) throw DomainError("mutual_min must be positive");
}

std::string_view ToString(Rule rule) {
  switch (rule) {
    case Rule::kAssociationIdiosyncrasy:
      return "association_idiosyncrasy";
    case Rule::kRelationalIdiosyncrasy:
      return "relational_idiosyncrasy";
    case Rule::kNone:
      break;
  }
  return "none";
}

ClassificationResult Classify(const PhraseMetrics &m, const Thresholds &t) {
  if (m.phrase_responses < 1) {
    throw DomainError("phrase '" + m.phrase + "' has no responses");
  }
  ClassificationResult r;
  r.phrase = m.phrase;
  r.entropy_bits = m.entropy_bits;
  r.mutual_max = std::max(m.a12, m.a21);
  r.entropy_threshold_bits = t.entropy_factor * MaxEntropy(m.respondent_count_phrase);
  r.overlap_fraction = static_cast<double>(m.ph1 + m.ph2) / m.phrase_responses;

  const bool rule_a = r.mutual_max >= t.mutual_min;
  const bool rule_b = m.entropy_bits < r.entropy_threshold_bits &&
                      r.overlap_fraction < t.overlap_fraction_max;
  r.conventionalized = rule_a || rule_b;
  if (rule_a) {
    r.rule = Rule::kAssociationIdiosyncrasy;
  } else if (rule_b) {
    r.rule = Rule::kRelationalIdiosyncrasy;
  }
  return r;
}

GroupStats GroupAverages(std::span<const PhraseMetrics> rows, std::string label) {
  if (rows.empty()) throw DomainError("group averages of an empty set");
  GroupStats s;
  s.label = std::move(label);
  s.size = rows.size();
  for (const PhraseMetrics &m : rows) {
    s.mean_a12 += m.a12;
    s.mean_a21 += m.a21;
    s.mean_ph1 += m.ph1;
    s.mean_ph2 += m.ph2;
    s.mean_entropy += m.entropy_bits;
  }
  const double n = static_cast<double>(rows.size());
  s.mean_a12 /= n;
  s.mean_a21 /= n;
  s.mean_ph1 /= n;
  s.mean_ph2 /= n;
  s.mean_entropy /= n;
  return s;
}

double Accuracy(std::span<const ClassificationResult> results,
                std::span<const PhraseEntry> registry) {
  if (results.empty()) throw DomainError("accuracy of an empty result set");
  std::map<std::string_view, GoldLabel> gold;
  for (const PhraseEntry &e : registry) gold.emplace(e.phrase, e.gold_label);

  size_t correct = 0;
  for (const ClassificationResult &r : results) {
    auto it = gold.find(r.phrase);
    if (it == gold.end()) {
      throw ConsistencyError("phrase '" + r.phrase + "' is not in the registry");
    }
    if (r.conventionalized == (it->second == GoldLabel::kThesaurus)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(results.size());
}

}  // namespace assocmwe
