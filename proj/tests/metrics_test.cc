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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "assocmwe/error.h"
#include "oracles.h"

namespace assocmwe {
namespace {

using Counts = AssociationDistribution::Counts;

AssociationDistribution Dist(Counts counts, int respondents = 47,
                             std::string stimulus = "s") {
  return AssociationDistribution(std::move(stimulus), std::move(counts), respondents);
}

AssociationRecord Rec(std::string respondent, std::string stimulus, std::string response) {
  AssociationRecord r;
  r.respondent_id = std::move(respondent);
  r.stimulus = std::move(stimulus);
  r.response = std::move(response);
  return r;
}

TEST(EntropyTest, SingleOutcome) { EXPECT_EQ(Entropy(Dist({{"x", 26}})), 0.0); }

TEST(EntropyTest, Uniform) {
  Counts counts;
  for (int i = 0; i < 26; ++i) counts["r" + std::to_string(i)] = 1;
  EXPECT_NEAR(Entropy(Dist(counts)), std::log2(26.0), 1e-12);
  EXPECT_NEAR(Entropy(Dist(counts)), 4.7004, 5e-5);
}

TEST(EntropyTest, HandComputed) {
  EXPECT_DOUBLE_EQ(Entropy(Dist({{"a", 2}, {"b", 1}, {"c", 1}})), 1.5);
}

TEST(EntropyTest, EmptyDistribution) {
  EXPECT_THROW(Entropy(Dist({})), DomainError);
}

TEST(EntropyTest, BoundedByMaxEntropy) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    int respondents = 1 + rng() % 60;
    Counts counts;
    int answered = 1 + rng() % respondents;
    int vocab = 1 + rng() % answered;
    for (int i = 0; i < answered; ++i) ++counts["r" + std::to_string(rng() % vocab)];
    EXPECT_LE(Entropy(Dist(counts, respondents)), MaxEntropy(respondents) + 1e-12);
  }
}

TEST(EntropyTest, IncreasesTowardEvenSplit) {
  for (int n = 2; n <= 40; ++n) {
    for (int a = n - 1; a > (n + 1) / 2; --a) {
      double before = Entropy(Dist({{"x", a}, {"y", n - a}}));
      double after = Entropy(Dist({{"x", a - 1}, {"y", n - a + 1}}));
      EXPECT_GT(after, before) << n << " " << a;
    }
  }
}

TEST(MaxEntropyTest, PublishedThresholds) {
  EXPECT_NEAR(MaxEntropy(26), 4.7004, 5e-5);
  EXPECT_NEAR(MaxEntropy(29), 4.8580, 5e-5);
  EXPECT_NEAR(std::round(0.8 * MaxEntropy(26) * 100) / 100, 3.76, 1e-12);
  EXPECT_NEAR(std::round(0.8 * MaxEntropy(29) * 100) / 100, 3.89, 1e-12);
  EXPECT_EQ(MaxEntropy(1), 0.0);
}

TEST(MaxEntropyTest, DomainError) {
  EXPECT_THROW(MaxEntropy(0), DomainError);
  EXPECT_THROW(MaxEntropy(-3), DomainError);
}

TEST(MatcherTest, Parse) {
  EXPECT_TRUE(MatcherMode::Parse("exact").exact());
  EXPECT_EQ(MatcherMode::Parse("stem_prefix").prefix_length(), 5);
  EXPECT_EQ(MatcherMode::Parse("stem_prefix:4").prefix_length(), 4);
  EXPECT_THROW(MatcherMode::Parse("stem_prefix:2"), DomainError);
  EXPECT_THROW(MatcherMode::Parse("stem"), DomainError);
  EXPECT_EQ(MatcherMode::Parse("stem_prefix:6").ToString(), "stem_prefix:6");
}

TEST(MatcherTest, StemPrefix) {
  MatcherMode m = MatcherMode::StemPrefix(5);
  EXPECT_TRUE(m.Matches("телефон", "телефона"));
  EXPECT_TRUE(m.Matches("дом", "дом"));
  EXPECT_FALSE(m.Matches("дом", "дома"));
  EXPECT_FALSE(m.Matches("земля", "земельный"));
  EXPECT_TRUE(MatcherMode::StemPrefix(3).Matches("земля", "земельный"));
}

TEST(MutualAssociationCountTest, TableOne) {
  auto land = Dist({{"участок", 38}, {"вопрос", 2}});
  EXPECT_EQ(MutualAssociationCount(land, "участок", MatcherMode::Exact()), 38);
}

TEST(MutualAssociationCountTest, Absent) {
  auto dist = Dist({{"дача", 11}, {"земля", 11}});
  EXPECT_EQ(MutualAssociationCount(dist, "земельный", MatcherMode::Exact()), 0);
  EXPECT_EQ(MutualAssociationCount(dist, "дом", MatcherMode::Exact()), 0);
}

TEST(MutualAssociationCountTest, StemPrefixSumsVariants) {
  auto dist = Dist({{"телефон", 5}, {"телефоны", 2}, {"звонок", 3}});
  EXPECT_EQ(MutualAssociationCount(dist, "телефон", MatcherMode::StemPrefix(5)), 7);
  EXPECT_EQ(MutualAssociationCount(dist, "телефон", MatcherMode::Exact()), 5);
}

TEST(MutualAssociationCountTest, ExactEqualsLookup) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Counts counts;
    for (int i = 0; i < 20; ++i) ++counts["w" + std::to_string(rng() % 8)];
    auto dist = Dist(counts);
    std::string target = "w" + std::to_string(rng() % 10);
    auto it = counts.find(target);
    EXPECT_EQ(MutualAssociationCount(dist, target, MatcherMode::Exact()),
              it == counts.end() ? 0 : it->second);
  }
}

TEST(OverlapWeightTest, TableOne) {
  auto lot = Dist({{"дача", 11}, {"полицейский", 4}, {"дорога", 3}, {"дом", 2}, {"земля", 11}});
  auto phrase = Dist({{"дача", 12}, {"дом", 2}, {"надел", 2}}, 26);
  EXPECT_EQ(OverlapWeight(lot, phrase, MatcherMode::Exact()), 14);
}

TEST(OverlapWeightTest, Disjoint) {
  EXPECT_EQ(OverlapWeight(Dist({{"a", 3}}), Dist({{"b", 4}}), MatcherMode::Exact()), 0);
}

TEST(OverlapWeightTest, Identical) {
  auto d = Dist({{"a", 3}, {"b", 2}});
  EXPECT_EQ(OverlapWeight(d, d, MatcherMode::Exact()), 5);
}

TEST(OverlapWeightTest, BoundedByPhraseTotal) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    Counts c, p;
    for (int i = 0; i < 15; ++i) ++c["w" + std::to_string(rng() % 12)];
    for (int i = 0; i < 15; ++i) ++p["w" + std::to_string(rng() % 12)];
    auto comp = Dist(c), phrase = Dist(p);
    int w = OverlapWeight(comp, phrase, MatcherMode::Exact());
    bool all_shared = std::all_of(p.begin(), p.end(),
                                  [&c](const auto &kv) { return c.count(kv.first) > 0; });
    EXPECT_LE(w, phrase.total());
    EXPECT_EQ(w == phrase.total(), all_shared);
  }
}

DistributionMap TableOneDistributions() {
  DistributionMap dists;
  auto add = [&dists](std::string stimulus, Counts counts, int respondents) {
    dists.emplace(stimulus, AssociationDistribution(stimulus, std::move(counts), respondents));
  };
  add("земельный", {{"участок", 38}, {"вопрос", 2}}, 47);
  add("участок", {{"земля", 11}, {"дача", 11}, {"полицейский", 4}, {"дорога", 3}, {"дом", 2}}, 47);
  add("земельный участок", {{"дача", 12}, {"дом", 2}, {"надел", 2}}, 26);
  return dists;
}

TEST(ComputePhraseMetricsTest, TableOneLandLot) {
  PhraseEntry entry{"земельный участок", "земельный", "участок", GoldLabel::kThesaurus, {}};
  PhraseMetrics m = ComputePhraseMetrics(TableOneDistributions(), entry, MatcherMode::Exact());
  EXPECT_EQ(m.a12, 38);
  EXPECT_EQ(m.ph1, 0);
  EXPECT_EQ(m.ph2, 14);
  EXPECT_EQ(m.a21, 0);  // published 13: responses like "земля" are not exact matches
  EXPECT_EQ(m.respondent_count_phrase, 26);
  EXPECT_EQ(m.respondent_count_words, 47);
  EXPECT_EQ(m.phrase_responses, 16);
}

TEST(ComputePhraseMetricsTest, NoSharedAssociations) {
  DistributionMap dists;
  dists.emplace("a", AssociationDistribution("a", {{"x", 3}}, 5));
  dists.emplace("b", AssociationDistribution("b", {{"y", 3}}, 5));
  dists.emplace("a b", AssociationDistribution("a b", {{"z", 4}}, 5));
  PhraseMetrics m = ComputePhraseMetrics(dists, {"a b", "a", "b", GoldLabel::kThesaurus, {}},
                                         MatcherMode::Exact());
  EXPECT_EQ(m.a12 + m.a21 + m.ph1 + m.ph2, 0);
}

TEST(ComputePhraseMetricsTest, MissingDistributionNamesStimulus) {
  auto dists = TableOneDistributions();
  PhraseEntry entry{"земельный участок", "земельный", "надел", GoldLabel::kThesaurus, {}};
  try {
    ComputePhraseMetrics(dists, entry, MatcherMode::Exact());
    FAIL() << "expected MissingDataError";
  } catch (const MissingDataError &e) {
    EXPECT_EQ(e.key(), "надел");
  }
}

TEST(ComputePhraseMetricsTest, HandBuiltFourRespondentCorpus) {
  std::vector<AssociationRecord> records = {
      Rec("1", "p q", "a"), Rec("2", "p q", "a"), Rec("3", "p q", "b"), Rec("4", "p q", "c"),
      Rec("1", "p", "q"),   Rec("2", "p", "a"),   Rec("3", "p", "x"),   Rec("4", "p", "q"),
      Rec("1", "q", "p"),   Rec("2", "q", "b"),   Rec("3", "q", "y"),   Rec("4", "q", "z"),
  };
  RespondentMetadata meta({{"all", std::nullopt, 4, {}}});
  PhraseMetrics m = ComputePhraseMetrics(BuildDistributions(records, meta),
                                         {"p q", "p", "q", GoldLabel::kThesaurus, {}},
                                         MatcherMode::Exact());
  // Hand count: p->q twice, q->p once; "a" (x2) shared with p, "b" with q.
  EXPECT_EQ(m.a12, 2);
  EXPECT_EQ(m.a21, 1);
  EXPECT_EQ(m.ph1, 2);
  EXPECT_EQ(m.ph2, 1);
  EXPECT_DOUBLE_EQ(m.entropy_bits, 1.5);

  oracle::Metrics o = oracle::BruteForceMetrics(records, "p q", "p", "q");
  EXPECT_EQ(m.a12, o.a12);
  EXPECT_EQ(m.a21, o.a21);
  EXPECT_EQ(m.ph1, o.ph1);
  EXPECT_EQ(m.ph2, o.ph2);
  EXPECT_NEAR(m.entropy_bits, o.entropy, 1e-12);
}

TEST(ComputePhraseMetricsTest, AgreesWithEnumerationOracle) {
  std::mt19937 rng(31);
  const std::vector<std::string> vocab = {"p", "q", "a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<AssociationRecord> records;
    const int n = 1 + rng() % 12;
    for (const char *stimulus : {"p q", "p", "q"}) {
      for (int i = 0; i < n; ++i) {
        records.push_back(Rec(std::to_string(i), stimulus, vocab[rng() % vocab.size()]));
      }
    }
    RespondentMetadata meta({{"all", std::nullopt, n, {}}});
    PhraseEntry entry{"p q", "p", "q", GoldLabel::kThesaurus, {}};
    PhraseMetrics m =
        ComputePhraseMetrics(BuildDistributions(records, meta), entry, MatcherMode::Exact());
    oracle::Metrics o = oracle::BruteForceMetrics(records, "p q", "p", "q");
    EXPECT_EQ(m.a12, o.a12);
    EXPECT_EQ(m.a21, o.a21);
    EXPECT_EQ(m.ph1, o.ph1);
    EXPECT_EQ(m.ph2, o.ph2);
    EXPECT_NEAR(m.entropy_bits, o.entropy, 1e-9);

    std::shuffle(records.begin(), records.end(), rng);
    EXPECT_EQ(ComputePhraseMetrics(BuildDistributions(records, meta), entry,
                                   MatcherMode::Exact()),
              m);
  }
}

TEST(PhraseMetricsTest, Validate) {
  PhraseMetrics m;
  m.phrase = "x y";
  m.respondent_count_phrase = 26;
  m.respondent_count_words = 47;
  m.phrase_responses = 26;
  m.entropy_bits = 2.0;
  EXPECT_NO_THROW(m.Validate());
  m.a12 = 48;
  EXPECT_THROW(m.Validate(), ValidationError);
  m.a12 = 0;
  m.entropy_bits = 4.71;
  EXPECT_THROW(m.Validate(), ValidationError);
  m.entropy_bits = 4.70;
  m.ph1 = 30;
  m.ph2 = 23;
  EXPECT_THROW(m.Validate(), ValidationError);
}

TEST(MetricsFixtureTest, BundledTables) {
  auto rows = LoadMetricsFixture(
      ReadFile(std::string(ASSOCMWE_DATA_DIR) + "/fixtures/tables23.csv"));
  ASSERT_EQ(rows.size(), 33u);
  EXPECT_EQ(rows[4].metrics.phrase, "земельный участок");
  EXPECT_EQ(rows[4].metrics.a12, 38);
  EXPECT_EQ(rows[4].metrics.a21, 13);
  EXPECT_EQ(rows[4].metrics.ph2, 14);
  EXPECT_DOUBLE_EQ(rows[4].metrics.entropy_bits, 2.89);
  EXPECT_EQ(rows[4].metrics.phrase_responses, 26);
  EXPECT_EQ(rows[32].gold_label, GoldLabel::kNonThesaurus);
}

TEST(MetricsFixtureTest, SerializeRoundTrip) {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> entropy(0.0, 4.0);
  std::vector<MetricsRow> rows;
  for (int i = 0; i < 20; ++i) {
    MetricsRow r;
    r.metrics.phrase = "фраза " + std::to_string(i);
    r.metrics.a12 = rng() % 20;
    r.metrics.a21 = rng() % 20;
    r.metrics.ph1 = rng() % 10;
    r.metrics.ph2 = rng() % 10;
    r.metrics.entropy_bits = entropy(rng);
    r.metrics.respondent_count_phrase = 26;
    r.metrics.respondent_count_words = 47;
    r.metrics.phrase_responses = i % 5 == 0 ? 25 : 26;
    r.gold_label = i % 2 ? GoldLabel::kThesaurus : GoldLabel::kNonThesaurus;
    rows.push_back(r);
  }
  EXPECT_EQ(LoadMetricsFixture(SerializeMetricsFixture(rows)), rows);
}

TEST(MetricsFixtureTest, Errors) {
  const std::string header =
      "phrase,gold_label,a12,a21,ph1,ph2,entropy,respondent_count_phrase,"
      "respondent_count_words\n";
  EXPECT_THROW(LoadMetricsFixture(header + "а б,thesaurus,1,2,3,4,2.0,26\n"), ParseError);
  EXPECT_THROW(LoadMetricsFixture(header + "а б,thesaurus,x,2,3,4,2.0,26,47\n"), ParseError);
  EXPECT_THROW(LoadMetricsFixture(header + "а б,thesaurus,1,2,3,4,nan,26,47\n"), ParseError);
  EXPECT_THROW(LoadMetricsFixture(header + "а б,thesaurus,1,2,3,4,9.0,26,47\n"),
               ValidationError);
  EXPECT_THROW(LoadMetricsFixture(header + "а б,thesaurus,1,2,3,4,2.0,26,47\n"
                                           "А  Б,thesaurus,1,2,3,4,2.0,26,47\n"),
               ValidationError);
}

TEST(MetricsFixtureTest, RegistryFromFixtureSplitsAtFirstSpace) {
  MetricsRow r;
  r.metrics.phrase = "пресс-служба администрации";
  r.gold_label = GoldLabel::kNonThesaurus;
  auto registry = RegistryFromFixture(std::vector<MetricsRow>{r});
  EXPECT_EQ(registry[0].word1, "пресс-служба");
  EXPECT_EQ(registry[0].word2, "администрации");
}

}  // namespace
}  // namespace assocmwe
