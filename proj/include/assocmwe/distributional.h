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

#ifndef ASSOCMWE_DISTRIBUTIONAL_H_
#define ASSOCMWE_DISTRIBUTIONAL_H_

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assocmwe/corpus.h"

namespace assocmwe {

using Vector = std::vector<double>;

// Token -> embedding, all of one dimension. Keys are normalized with
// NormalizeResponse. Immutable once constructed.
class EmbeddingTable {
 public:
  using Entries = std::map<std::string, Vector, std::less<>>;

  // Throws ValidationError on a dimension mismatch, a zero or non-finite
  // vector, or dimension < 1.
  EmbeddingTable(int dimension, Entries entries);

  int dimension() const { return dimension_; }
  size_t size() const { return entries_.size(); }
  const Entries &entries() const { return entries_; }

  // nullptr if absent. `token` is normalized before lookup.
  const Vector *Find(std::string_view token) const;

 private:
  int dimension_;
  Entries entries_;
};

// Parses the word2vec text format: a `<count> <dimension>` header, then one
// line per token with `dimension` reals, whitespace separated. A count that
// disagrees with the number of rows, or a token repeated after normalization
// (first one kept), adds a message to `warnings` instead of failing.
EmbeddingTable LoadVectors(std::string_view content,
                           std::vector<std::string> *warnings = nullptr);

std::string SerializeVectors(const EmbeddingTable &table);

// v1/|v1| + v2/|v2|. Throws DomainError on a zero norm or unequal sizes.
Vector CompositionalVector(std::span<const double> v1, std::span<const double> v2);

// Cosine similarity clamped to [-1, 1]. Throws DomainError on a zero norm or
// unequal sizes.
double Cosine(std::span<const double> a, std::span<const double> b);

enum class ScoreStatus { kOk, kMissingPhraseVector, kMissingComponentVector };

std::string_view ToString(ScoreStatus status);

struct CompositionalityScore {
  std::string phrase;
  std::optional<double> score;  // set iff status == kOk
  ScoreStatus status = ScoreStatus::kOk;
};

inline constexpr std::string_view kDefaultJoiner = "_";

// Embedding token of a phrase: its words joined by `joiner`.
std::string PhraseToken(const PhraseEntry &entry,
                        std::string_view joiner = kDefaultJoiner);

// Cosine between the phrase vector and CompositionalVector of the component
// vectors. A missing phrase vector is reported before missing components.
CompositionalityScore ScoreCompositionality(
    const EmbeddingTable &table, const PhraseEntry &entry,
    std::string_view joiner = kDefaultJoiner);

// CSV `phrase,score,status`; score is empty for non-ok statuses.
std::string SerializeScores(std::span<const CompositionalityScore> scores);

}  // namespace assocmwe

#endif  // ASSOCMWE_DISTRIBUTIONAL_H_
