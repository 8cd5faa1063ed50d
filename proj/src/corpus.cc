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

#include "assocmwe/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "assocmwe/csv.h"
#include "assocmwe/error.h"
#include "assocmwe/normalize.h"
#include "json.hpp"

namespace assocmwe {

namespace {

const std::vector<std::string> kAssociationHeader = {
    "respondent", "stimulus_kind", "stimulus", "response"};
const std::vector<std::string> kRegistryHeader = {"phrase", "word1", "word2",
                                                  "gold_label"};

char Delimiter(TableFormat format) {
  return format == TableFormat::kTsv ? '\t' : ',';
}

std::string TrimCopy(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view ToString(StimulusKind kind) {
  return kind == StimulusKind::kWord ? "word" : "phrase";
}

std::string_view ToString(GoldLabel label) {
  return label == GoldLabel::kThesaurus ? "thesaurus" : "non_thesaurus";
}

std::optional<StimulusKind> ParseStimulusKind(std::string_view token) {
  std::string t = TrimCopy(token);
  if (t == "word") return StimulusKind::kWord;
  if (t == "phrase") return StimulusKind::kPhrase;
  return std::nullopt;
}

std::optional<GoldLabel> ParseGoldLabel(std::string_view token) {
  std::string t = TrimCopy(token);
  if (t == "thesaurus") return GoldLabel::kThesaurus;
  if (t == "non_thesaurus") return GoldLabel::kNonThesaurus;
  return std::nullopt;
}

ParsedAssociations ParseAssociationFile(std::string_view content,
                                        TableFormat format) {
  std::vector<CsvRow> rows = ParseCsv(content, Delimiter(format));
  if (rows.empty()) throw ParseError("missing header", 1);
  ExpectHeader(rows.front(), kAssociationHeader);

  ParsedAssociations out;
  std::unordered_map<std::string, int> next_position;
  for (size_t i = 1; i < rows.size(); ++i) {
    const CsvRow &row = rows[i];
    if (row.fields.size() != kAssociationHeader.size()) {
      throw ParseError("expected 4 columns, found " +
                           std::to_string(row.fields.size()),
                       row.line);
    }
    auto kind = ParseStimulusKind(row.fields[1]);
    if (!kind) {
      throw ParseError("unknown stimulus_kind '" + row.fields[1] + "'",
                       row.line);
    }
    AssociationRecord record;
    record.respondent_id = TrimCopy(row.fields[0]);
    record.stimulus_kind = *kind;
    record.stimulus = NormalizeResponse(row.fields[2]);
    record.response = NormalizeResponse(row.fields[3]);
    if (record.respondent_id.empty()) throw ParseError("empty respondent", row.line);
    if (record.stimulus.empty()) throw ParseError("empty stimulus", row.line);
    if (record.response.empty()) {
      ++out.dropped_empty;
      continue;
    }
    record.position = ++next_position[record.stimulus];
    out.records.push_back(std::move(record));
  }
  return out;
}

std::string SerializeAssociationFile(std::span<const AssociationRecord> records,
                                     TableFormat format) {
  const char delim = Delimiter(format);
  std::string out = CsvLine(kAssociationHeader, delim);
  for (const AssociationRecord &r : records) {
    out += CsvLine({r.respondent_id, std::string(ToString(r.stimulus_kind)),
                    r.stimulus, r.response},
                   delim);
  }
  return out;
}

AssociationDistribution::AssociationDistribution(std::string stimulus,
                                                 Counts counts,
                                                 int respondent_count)
    : stimulus_(std::move(stimulus)),
      counts_(std::move(counts)),
      respondent_count_(respondent_count) {
  if (respondent_count_ < 1) {
    throw DomainError("respondent count must be positive for '" + stimulus_ +
                      "'");
  }
  for (const auto &[response, count] : counts_) {
    if (count < 1) {
      throw DomainError("non-positive count for response '" + response + "'");
    }
    total_ += count;
  }
}

int AssociationDistribution::Count(std::string_view response) const {
  auto it = counts_.find(response);
  return it == counts_.end() ? 0 : it->second;
}

AssociationDistribution BuildDistribution(
    std::span<const AssociationRecord> records, std::string_view stimulus,
    int respondent_count) {
  AssociationDistribution::Counts counts;
  std::set<std::string_view> respondents;
  for (const AssociationRecord &r : records) {
    if (r.stimulus != stimulus) {
      throw ConsistencyError("record for '" + r.stimulus +
                             "' passed to distribution of '" +
                             std::string(stimulus) + "'");
    }
    ++counts[r.response];
    respondents.insert(r.respondent_id);
  }
  if (static_cast<int>(respondents.size()) > respondent_count) {
    throw ConsistencyError("stimulus '" + std::string(stimulus) + "' has " +
                           std::to_string(respondents.size()) +
                           " respondents but declares " +
                           std::to_string(respondent_count));
  }
  return AssociationDistribution(std::string(stimulus), std::move(counts),
                                 respondent_count);
}

std::vector<AssociationRecord> TakeFirstK(
    std::span<const AssociationRecord> records, int k) {
  if (k < 1) throw DomainError("k must be positive");

  // Position cut-off per stimulus: the k-th smallest position.
  std::unordered_map<std::string_view, std::vector<int>> positions;
  for (const AssociationRecord &r : records) positions[r.stimulus].push_back(r.position);
  std::unordered_map<std::string_view, int> cutoff;
  for (auto &[stimulus, ps] : positions) {
    if (static_cast<int>(ps.size()) <= k) {
      cutoff[stimulus] = std::numeric_limits<int>::max();
    } else {
      std::nth_element(ps.begin(), ps.begin() + (k - 1), ps.end());
      cutoff[stimulus] = ps[k - 1];
    }
  }

  std::vector<AssociationRecord> kept;
  std::unordered_map<std::string_view, int> taken;
  for (const AssociationRecord &r : records) {
    int &n = taken[r.stimulus];
    if (r.position <= cutoff[r.stimulus] && n < k) {
      kept.push_back(r);
      ++n;
    }
  }
  return kept;
}

RespondentMetadata::RespondentMetadata(std::vector<Group> groups)
    : groups_(std::move(groups)) {
  for (const Group &g : groups_) {
    if (g.respondent_count < 1) {
      throw ValidationError("group '" + g.name +
                            "' needs a positive respondent_count");
    }
  }
}

RespondentMetadata RespondentMetadata::FromJson(std::string_view content) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error &e) {
    throw ParseError(std::string("metadata: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("groups") || !doc["groups"].is_array()) {
    throw ValidationError("metadata: expected an object with a 'groups' array");
  }
  std::vector<Group> groups;
  for (const auto &item : doc["groups"]) {
    if (!item.is_object() || !item.contains("respondent_count") ||
        !item["respondent_count"].is_number_integer()) {
      throw ValidationError("metadata: every group needs an integer respondent_count");
    }
    Group g;
    g.name = item.value("name", "");
    g.respondent_count = item["respondent_count"].get<int>();
    if (item.contains("stimulus_kind")) {
      auto kind = ParseStimulusKind(item["stimulus_kind"].get<std::string>());
      if (!kind) throw ValidationError("metadata: unknown stimulus_kind in group '" + g.name + "'");
      g.kind = kind;
    }
    if (item.contains("stimuli")) {
      for (const auto &s : item["stimuli"]) {
        g.stimuli.push_back(NormalizeResponse(s.get<std::string>()));
      }
    }
    groups.push_back(std::move(g));
  }
  return RespondentMetadata(std::move(groups));
}

const RespondentMetadata::Group &RespondentMetadata::GroupFor(
    std::string_view stimulus, StimulusKind kind) const {
  for (const Group &g : groups_) {
    if (std::find(g.stimuli.begin(), g.stimuli.end(), stimulus) != g.stimuli.end()) {
      return g;
    }
  }
  const Group *any = nullptr;
  for (const Group &g : groups_) {
    if (!g.stimuli.empty()) continue;
    if (g.kind == kind) return g;
    if (!g.kind && any == nullptr) any = &g;
  }
  if (any != nullptr) return *any;
  throw MissingDataError("no respondent count declared for stimulus '" +
                             std::string(stimulus) + "'",
                         std::string(stimulus));
}

RespondentMetadata RespondentMetadata::CappedAt(int k) const {
  std::vector<Group> groups = groups_;
  for (Group &g : groups) g.respondent_count = std::min(g.respondent_count, k);
  return RespondentMetadata(std::move(groups));
}

DistributionMap BuildDistributions(std::span<const AssociationRecord> records,
                                   const RespondentMetadata &metadata) {
  std::map<std::string, std::vector<AssociationRecord>, std::less<>> by_stimulus;
  for (const AssociationRecord &r : records) by_stimulus[r.stimulus].push_back(r);

  DistributionMap out;
  for (const auto &[stimulus, group] : by_stimulus) {
    int count = metadata.RespondentCount(stimulus, group.front().stimulus_kind);
    out.emplace(stimulus, BuildDistribution(group, stimulus, count));
  }
  return out;
}

std::vector<PhraseEntry> LoadPhraseRegistry(std::string_view content) {
  std::vector<CsvRow> rows = ParseCsv(content);
  if (rows.empty()) throw ParseError("missing header", 1);
  ExpectHeader(rows.front(), kRegistryHeader, {"gloss"});

  std::vector<PhraseEntry> entries;
  std::set<std::string> seen;
  for (size_t i = 1; i < rows.size(); ++i) {
    const CsvRow &row = rows[i];
    if (row.fields.size() < 4 || row.fields.size() > 5) {
      throw ParseError("expected 4 or 5 columns, found " +
                           std::to_string(row.fields.size()),
                       row.line);
    }
    auto label = ParseGoldLabel(row.fields[3]);
    if (!label) {
      throw ParseError("unknown gold_label '" + row.fields[3] + "'", row.line);
    }
    PhraseEntry e;
    e.phrase = NormalizeResponse(row.fields[0]);
    e.word1 = NormalizeResponse(row.fields[1]);
    e.word2 = NormalizeResponse(row.fields[2]);
    e.gold_label = *label;
    if (row.fields.size() == 5 && !TrimCopy(row.fields[4]).empty()) {
      e.gloss = TrimCopy(row.fields[4]);
    }
    const std::string where = " (line " + std::to_string(row.line) + ")";
    if (e.phrase.empty()) throw ValidationError("empty phrase" + where);
    if (e.word1.empty() || e.word2.empty()) {
      throw ValidationError("missing component word for '" + e.phrase + "'" + where);
    }
    if (e.word1 == e.word2) {
      throw ValidationError("identical components for '" + e.phrase + "'" + where);
    }
    if (!seen.insert(e.phrase).second) {
      throw ValidationError("duplicate phrase '" + e.phrase + "'" + where);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace assocmwe
