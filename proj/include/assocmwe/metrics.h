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

#ifndef ASSOCMWE_METRICS_H_
#define ASSOCMWE_METRICS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assocmwe/corpus.h"

namespace assocmwe {

// Association statistics of one two-word phrase.
//   a12 / a21  how often word2 was given as a response to word1 / vice versa
//   ph1 / ph2  phrase-side frequency of phrase responses that also occur among
//              the responses to word1 / word2
struct PhraseMetrics {
  std::string phrase;
  int a12 = 0;
  int a21 = 0;
  int ph1 = 0;
  int ph2 = 0;
  double entropy_bits = 0.0;
  int respondent_count_phrase = 1;
  int respondent_count_words = 1;
  // Total responses collected for the phrase. Equals respondent_count_phrase
  // under the one-response protocol, and is set to it when loaded from a
  // fixture that does not carry it.
  int phrase_responses = 1;

  // Throws ValidationError if any invariant is violated. Entropy may exceed
  // log2(respondent_count_phrase) by up to `entropy_slack` (for rounded
  // published values).
  void Validate(double entropy_slack = 0.0) const;

  bool operator==(const PhraseMetrics &) const = default;
};

// How a response is matched against a target word or another response.
class MatcherMode {
 public:
  static constexpr int kDefaultStemPrefix = 5;

  static MatcherMode Exact() { return MatcherMode(0); }
  // Match when the strings are equal or share at least `k` leading code
  // points. Throws DomainError if k < 3.
  static MatcherMode StemPrefix(int k = kDefaultStemPrefix);
  // Accepts "exact", "stem_prefix" or "stem_prefix:<k>".
  static MatcherMode Parse(std::string_view text);

  bool exact() const { return prefix_ == 0; }
  int prefix_length() const { return prefix_; }
  bool Matches(std::string_view a, std::string_view b) const;
  std::string ToString() const;

  bool operator==(const MatcherMode &) const = default;

 private:
  explicit MatcherMode(int prefix) : prefix_(prefix) {}
  int prefix_;
};

// Shannon entropy (base 2) of the response frequencies. Throws DomainError on
// an empty distribution.
double Entropy(const AssociationDistribution &dist);

// log2(respondent_count): the entropy when every respondent answers
// differently. Throws DomainError if respondent_count < 1.
double MaxEntropy(int respondent_count);

// Sum of counts of responses in `dist` matching `target_word`.
int MutualAssociationCount(const AssociationDistribution &dist,
                           std::string_view target_word,
                           const MatcherMode &matcher);

// Sum of phrase-side frequencies over phrase response types that match some
// response type of the component.
int OverlapWeight(const AssociationDistribution &component_dist,
                  const AssociationDistribution &phrase_dist,
                  const MatcherMode &matcher);

// Throws MissingDataError naming the first stimulus without a distribution.
PhraseMetrics ComputePhraseMetrics(const DistributionMap &dists,
                                   const PhraseEntry &entry,
                                   const MatcherMode &matcher);

// A metrics row with its gold label, as stored in the metrics CSV
// `phrase,gold_label,a12,a21,ph1,ph2,entropy,respondent_count_phrase,
//  respondent_count_words[,phrase_responses]`.
struct MetricsRow {
  PhraseMetrics metrics;
  GoldLabel gold_label = GoldLabel::kNonThesaurus;

  bool operator==(const MetricsRow &) const = default;
};

// Tolerance for published entropies that were rounded to two decimals.
inline constexpr double kRoundedEntropySlack = 0.005;

std::vector<MetricsRow> LoadMetricsFixture(std::string_view content);

// Writes the nine standard columns; `phrase_responses` is added only when some
// row differs from its respondent_count_phrase. Entropy is written at full
// precision.
std::string SerializeMetricsFixture(std::span<const MetricsRow> rows);

// Registry entries implied by fixture rows: components are the text before
// and after the first space of the phrase.
std::vector<PhraseEntry> RegistryFromFixture(std::span<const MetricsRow> rows);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);

}  // namespace assocmwe

#endif  // ASSOCMWE_METRICS_H_
