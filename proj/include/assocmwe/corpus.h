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

#ifndef ASSOCMWE_CORPUS_H_
#define ASSOCMWE_CORPUS_H_

// Ingestion of free-association survey data: raw response records, the
// per-stimulus frequency tables built from them, and the registry of
// two-word phrases with their gold labels.

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace assocmwe {

enum class StimulusKind { kWord, kPhrase };
enum class GoldLabel { kThesaurus, kNonThesaurus };
enum class TableFormat { kCsv, kTsv };

std::string_view ToString(StimulusKind kind);
std::string_view ToString(GoldLabel label);
std::optional<StimulusKind> ParseStimulusKind(std::string_view token);
std::optional<GoldLabel> ParseGoldLabel(std::string_view token);

// One respondent's response to one stimulus.
struct AssociationRecord {
  std::string respondent_id;
  std::string stimulus;
  StimulusKind stimulus_kind = StimulusKind::kWord;
  std::string response;
  // 1-based collection order of this response among all responses to the
  // same stimulus. Unique per stimulus, hence per (stimulus, respondent).
  int position = 1;

  bool operator==(const AssociationRecord &) const = default;
};

struct ParsedAssociations {
  std::vector<AssociationRecord> records;
  // Rows whose response normalized to the empty string.
  int dropped_empty = 0;
};

// Parses an association table with header
// `respondent,stimulus_kind,stimulus,response`. Stimuli and responses are
// normalized. Positions follow row order within each stimulus.
ParsedAssociations ParseAssociationFile(std::string_view content,
                                        TableFormat format = TableFormat::kCsv);

// Canonical text of `records` in the same format; records are written in the
// given order, so ParseAssociationFile(Serialize(r)) == r when the positions
// in `r` follow that order.
std::string SerializeAssociationFile(std::span<const AssociationRecord> records,
                                     TableFormat format = TableFormat::kCsv);

// Frequency table of normalized responses to one stimulus.
class AssociationDistribution {
 public:
  using Counts = std::map<std::string, int, std::less<>>;

  // Throws DomainError if respondent_count < 1 or any count < 1.
  AssociationDistribution(std::string stimulus, Counts counts,
                          int respondent_count);

  const std::string &stimulus() const { return stimulus_; }
  const Counts &counts() const { return counts_; }
  int respondent_count() const { return respondent_count_; }

  // Sum of all counts.
  int total() const { return total_; }
  bool empty() const { return counts_.empty(); }

  // Frequency of `response`, 0 if absent.
  int Count(std::string_view response) const;

  bool operator==(const AssociationDistribution &) const = default;

 private:
  std::string stimulus_;
  Counts counts_;
  int respondent_count_;
  int total_ = 0;
};

using DistributionMap =
    std::map<std::string, AssociationDistribution, std::less<>>;

// Aggregates the records of one stimulus. Throws ConsistencyError if a record
// has a different stimulus or the records name more distinct respondents than
// `respondent_count`.
AssociationDistribution BuildDistribution(
    std::span<const AssociationRecord> records, std::string_view stimulus,
    int respondent_count);

// Keeps, for every stimulus, the `k` records with the smallest positions.
// Relative order of kept records is preserved. Throws DomainError if k < 1.
std::vector<AssociationRecord> TakeFirstK(
    std::span<const AssociationRecord> records, int k);

// Declared respondent counts, from the JSON sidecar of an association file:
//
//   {"groups": [
//     {"name": "thesaurus", "stimulus_kind": "phrase", "respondent_count": 26,
//      "stimuli": ["земельный участок", ...]},
//     {"name": "words", "stimulus_kind": "word", "respondent_count": 47}]}
//
// A group with a "stimuli" list applies to exactly those stimuli. A group
// without one is the fallback for its stimulus_kind (or for every stimulus if
// stimulus_kind is omitted). Explicit lists take precedence over fallbacks.
class RespondentMetadata {
 public:
  struct Group {
    std::string name;
    std::optional<StimulusKind> kind;
    int respondent_count = 0;
    std::vector<std::string> stimuli;  // normalized; empty = fallback group
  };

  RespondentMetadata() = default;
  explicit RespondentMetadata(std::vector<Group> groups);

  static RespondentMetadata FromJson(std::string_view content);

  const std::vector<Group> &groups() const { return groups_; }

  // Throws MissingDataError if no group covers the stimulus.
  const Group &GroupFor(std::string_view stimulus, StimulusKind kind) const;
  int RespondentCount(std::string_view stimulus, StimulusKind kind) const {
    return GroupFor(stimulus, kind).respondent_count;
  }

  // Copy with every respondent count limited to `k`; used together with
  // TakeFirstK, where at most k responses per stimulus survive.
  RespondentMetadata CappedAt(int k) const;

 private:
  std::vector<Group> groups_;
};

// One distribution per distinct stimulus in `records`.
DistributionMap BuildDistributions(std::span<const AssociationRecord> records,
                                   const RespondentMetadata &metadata);

struct PhraseEntry {
  std::string phrase;
  std::string word1;
  std::string word2;
  GoldLabel gold_label = GoldLabel::kNonThesaurus;
  std::optional<std::string> gloss;

  bool operator==(const PhraseEntry &) const = default;
};

// Parses a registry with header `phrase,word1,word2,gold_label[,gloss]`.
// Throws ParseError on malformed rows or unknown labels, ValidationError on a
// duplicate phrase, an empty component, or identical components.
std::vector<PhraseEntry> LoadPhraseRegistry(std::string_view content);

// Fetches a required file into memory; throws Error naming the path.
std::string ReadFile(const std::string &path);

}  // namespace assocmwe

#endif  // ASSOCMWE_CORPUS_H_
