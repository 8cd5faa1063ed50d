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

#include "assocmwe/metrics.h"

#include <charconv>
#include <cmath>
#include <set>

#include "assocmwe/csv.h"
#include "assocmwe/error.h"
#include "assocmwe/normalize.h"

namespace assocmwe {

namespace {

const std::vector<std::string> kFixtureHeader = {
    "phrase", "gold_label", "a12", "a21", "ph1", "ph2", "entropy",
    "respondent_count_phrase", "respondent_count_words"};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int ParseInt(std::string_view text, const char *column, int line) {
  text = Trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError(std::string("bad integer in column ") + column + ": '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

double ParseReal(std::string_view text, const char *column, int line) {
  text = Trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      !std::isfinite(value)) {
    throw ParseError(std::string("bad number in column ") + column + ": '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

}  // namespace

void PhraseMetrics::Validate(double entropy_slack) const {
  auto fail = [this](const std::string &what) {
    throw ValidationError("metrics for '" + phrase + "': " + what);
  };
  if (phrase.empty()) fail("empty phrase");
  if (a12 < 0 || a21 < 0 || ph1 < 0 || ph2 < 0) fail("negative count");
  if (respondent_count_phrase < 1 || respondent_count_words < 1) {
    fail("respondent counts must be positive");
  }
  if (phrase_responses < 1) fail("phrase has no responses");
  if (!(entropy_bits >= 0.0) ||
      entropy_bits > MaxEntropy(respondent_count_phrase) + entropy_slack) {
    fail("entropy outside [0, log2(respondent_count_phrase)]");
  }
  if (a12 > respondent_count_words || a21 > respondent_count_words) {
    fail("mutual association count exceeds respondent_count_words");
  }
  if (ph1 + ph2 > 2 * phrase_responses) {
    fail("overlap exceeds twice the phrase response total");
  }
}

MatcherMode MatcherMode::StemPrefix(int k) {
  if (k < 3) throw DomainError("stem_prefix length must be at least 3");
  return MatcherMode(k);
}

MatcherMode MatcherMode::Parse(std::string_view text) {
  text = Trim(text);
  if (text == "exact") return Exact();
  constexpr std::string_view kStem = "stem_prefix";
  if (text.substr(0, kStem.size()) == kStem) {
    std::string_view rest = text.substr(kStem.size());
    if (rest.empty()) return StemPrefix();
    if (rest.front() == ':') {
      rest.remove_prefix(1);
      int k = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
      if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) {
        return StemPrefix(k);
      }
    }
  }
  throw DomainError("unknown matcher '" + std::string(text) +
                    "' (expected exact or stem_prefix[:k])");
}

bool MatcherMode::Matches(std::string_view a, std::string_view b) const {
  if (a == b) return true;
  if (exact()) return false;
  return CommonPrefixLength(a, b) >= static_cast<size_t>(prefix_);
}

std::string MatcherMode::ToString() const {
  return exact() ? "exact" : "stem_prefix:" + std::to_string(prefix_);
}

double Entropy(const AssociationDistribution &dist) {
  if (dist.empty()) {
    throw DomainError("entropy of empty distribution for '" + dist.stimulus() + "'");
  }
  const double total = dist.total();
  double h = 0.0;
  for (const auto &[response, count] : dist.counts()) {
    const double p = count / total;
    h -= p * std::log2(p);
  }
  // A single response type gives exactly zero; avoid returning -0.0.
  return h > 0.0 ? h : 0.0;
}

double MaxEntropy(int respondent_count) {
  if (respondent_count < 1) throw DomainError("respondent count must be positive");
  return std::log2(static_cast<double>(respondent_count));
}

int MutualAssociationCount(const AssociationDistribution &dist,
                           std::string_view target_word,
                           const MatcherMode &matcher) {
  if (matcher.exact()) return dist.Count(target_word);
  int sum = 0;
  for (const auto &[response, count] : dist.counts()) {
    if (matcher.Matches(response, target_word)) sum += count;
  }
  return sum;
}

int OverlapWeight(const AssociationDistribution &component_dist,
                  const AssociationDistribution &phrase_dist,
                  const MatcherMode &matcher) {
  int weight = 0;
  for (const auto &[response, count] : phrase_dist.counts()) {
    if (matcher.exact()) {
      if (component_dist.Count(response) > 0) weight += count;
      continue;
    }
    for (const auto &[other, unused] : component_dist.counts()) {
      if (matcher.Matches(response, other)) {
        weight += count;
        break;
      }
    }
  }
  return weight;
}

PhraseMetrics ComputePhraseMetrics(const DistributionMap &dists,
                                   const PhraseEntry &entry,
                                   const MatcherMode &matcher) {
  auto lookup = [&dists, &entry](const std::string &stimulus)
      -> const AssociationDistribution & {
    auto it = dists.find(stimulus);
    if (it == dists.end()) {
      throw MissingDataError("no associations for stimulus '" + stimulus +
                                 "' (phrase '" + entry.phrase + "')",
                             stimulus);
    }
    return it->second;
  };
  const AssociationDistribution &phrase = lookup(entry.phrase);
  const AssociationDistribution &w1 = lookup(entry.word1);
  const AssociationDistribution &w2 = lookup(entry.word2);

  PhraseMetrics m;
  m.phrase = entry.phrase;
  m.a12 = MutualAssociationCount(w1, entry.word2, matcher);
  m.a21 = MutualAssociationCount(w2, entry.word1, matcher);
  m.ph1 = OverlapWeight(w1, phrase, matcher);
  m.ph2 = OverlapWeight(w2, phrase, matcher);
  m.entropy_bits = Entropy(phrase);
  m.respondent_count_phrase = phrase.respondent_count();
  m.respondent_count_words = std::max(w1.respondent_count(), w2.respondent_count());
  m.phrase_responses = phrase.total();
  return m;
}

std::vector<MetricsRow> LoadMetricsFixture(std::string_view content) {
  std::vector<CsvRow> rows = ParseCsv(content);
  if (rows.empty()) throw ParseError("missing header", 1);
  ExpectHeader(rows.front(), kFixtureHeader, {"phrase_responses"});
  const size_t columns = rows.front().fields.size();

  std::vector<MetricsRow> out;
  std::set<std::string> seen;
  for (size_t i = 1; i < rows.size(); ++i) {
    const CsvRow &row = rows[i];
    if (row.fields.size() != columns) {
      throw ParseError("expected " + std::to_string(columns) + " columns, found " +
                           std::to_string(row.fields.size()),
                       row.line);
    }
    const auto &f = row.fields;
    auto label = ParseGoldLabel(f[1]);
    if (!label) throw ParseError("unknown gold_label '" + f[1] + "'", row.line);

    MetricsRow r;
    r.gold_label = *label;
    PhraseMetrics &m = r.metrics;
    m.phrase = NormalizeResponse(f[0]);
    m.a12 = ParseInt(f[2], "a12", row.line);
    m.a21 = ParseInt(f[3], "a21", row.line);
    m.ph1 = ParseInt(f[4], "ph1", row.line);
    m.ph2 = ParseInt(f[5], "ph2", row.line);
    m.entropy_bits = ParseReal(f[6], "entropy", row.line);
    m.respondent_count_phrase = ParseInt(f[7], "respondent_count_phrase", row.line);
    m.respondent_count_words = ParseInt(f[8], "respondent_count_words", row.line);
    m.phrase_responses = columns > 9 ? ParseInt(f[9], "phrase_responses", row.line)
                                     : m.respondent_count_phrase;
    try {
      m.Validate(kRoundedEntropySlack);
    } catch (const ValidationError &e) {
      throw ValidationError(std::string(e.what()) + " (line " +
                            std::to_string(row.line) + ")");
    }
    if (!seen.insert(m.phrase).second) {
      throw ValidationError("duplicate phrase '" + m.phrase + "' (line " +
                            std::to_string(row.line) + ")");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string SerializeMetricsFixture(std::span<const MetricsRow> rows) {
  bool extended = false;
  for (const MetricsRow &r : rows) {
    extended |= r.metrics.phrase_responses != r.metrics.respondent_count_phrase;
  }
  std::vector<std::string> header = kFixtureHeader;
  if (extended) header.push_back("phrase_responses");

  std::string out = CsvLine(header);
  for (const MetricsRow &r : rows) {
    const PhraseMetrics &m = r.metrics;
    std::vector<std::string> fields = {
        m.phrase,
        std::string(ToString(r.gold_label)),
        std::to_string(m.a12),
        std::to_string(m.a21),
        std::to_string(m.ph1),
        std::to_string(m.ph2),
        FormatDouble(m.entropy_bits),
        std::to_string(m.respondent_count_phrase),
        std::to_string(m.respondent_count_words)};
    if (extended) fields.push_back(std::to_string(m.phrase_responses));
    out += CsvLine(fields);
  }
  return out;
}

std::vector<PhraseEntry> RegistryFromFixture(std::span<const MetricsRow> rows) {
  std::vector<PhraseEntry> out;
  for (const MetricsRow &r : rows) {
    PhraseEntry e;
    e.phrase = r.metrics.phrase;
    size_t space = e.phrase.find(' ');
    if (space == std::string::npos) {
      throw ValidationError("fixture phrase '" + e.phrase + "' has one word");
    }
    e.word1 = e.phrase.substr(0, space);
    e.word2 = e.phrase.substr(space + 1);
    e.gold_label = r.gold_label;
    out.push_back(std::move(e));
  }
  return out;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace assocmwe
