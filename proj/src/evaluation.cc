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

#include "assocmwe/evaluation.h"

#include <algorithm>
#include <cmath>

#include "assocmwe/csv.h"
#include "assocmwe/error.h"
#include "assocmwe/metrics.h"

namespace assocmwe {

std::string_view ToString(Direction direction) {
  return direction == Direction::kAscending ? "ascending" : "descending";
}

RankedList RankPhrases(const ScoreMap &scores, Direction direction,
                       std::span<const std::string> unscored) {
  if (scores.empty()) throw DomainError("nothing to rank");
  RankedList list;
  list.direction = direction;
  for (const auto &[phrase, key] : scores) {
    if (!std::isfinite(key)) {
      throw DomainError("non-finite key for '" + phrase + "'");
    }
    list.items.push_back({phrase, key});
  }
  // `scores` iterates in phrase order, so a stable sort leaves ties there.
  std::stable_sort(list.items.begin(), list.items.end(),
                   [direction](const RankedItem &a, const RankedItem &b) {
                     return direction == Direction::kAscending ? *a.key < *b.key
                                                               : *a.key > *b.key;
                   });

  std::vector<std::string> tail(unscored.begin(), unscored.end());
  std::sort(tail.begin(), tail.end());
  tail.erase(std::unique(tail.begin(), tail.end()), tail.end());
  for (std::string &phrase : tail) {
    if (scores.count(phrase) > 0) {
      throw ConsistencyError("'" + phrase + "' is both scored and unscored");
    }
    list.items.push_back({std::move(phrase), std::nullopt});
  }
  return list;
}

double AveragePrecision(const RankedList &ranked,
                        const std::set<std::string, std::less<>> &relevant) {
  if (relevant.empty()) throw DomainError("average precision needs relevant items");
  size_t hits = 0;
  double sum = 0.0;
  for (size_t i = 0; i < ranked.items.size(); ++i) {
    if (relevant.count(ranked.items[i].phrase) == 0) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  if (hits != relevant.size()) {
    throw ConsistencyError("relevant phrases missing from the ranking");
  }
  return sum / static_cast<double>(relevant.size());
}

std::string SerializeRanking(const RankedList &ranked,
                             const std::set<std::string, std::less<>> &relevant) {
  std::string out = CsvLine({"rank", "phrase", "key", "relevant"});
  for (size_t i = 0; i < ranked.items.size(); ++i) {
    const RankedItem &item = ranked.items[i];
    out += CsvLine({std::to_string(i + 1), item.phrase,
                    item.key ? FormatDouble(*item.key) : "",
                    relevant.count(item.phrase) > 0 ? "1" : "0"});
  }
  return out;
}

}  // namespace assocmwe
